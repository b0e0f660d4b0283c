//! The frame file format: a JSON object
//! `{"dim", "count", "p", "q", "functionals", "vectors"}` where
//! `functionals` holds `f_k` and `vectors` holds `τ_k`, one row each.

use std::fmt;
use std::fs;
use std::path::Path;

use pasf_core::{Exponent, FramePair, Matrix, PNormSpace};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::CliError;

/// An exponent as written in files: a number, or the string `"inf"`.
#[derive(Clone, Copy, Debug, PartialEq)]
struct ExponentField(f64);

impl Serialize for ExponentField {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.0.is_infinite() {
            s.serialize_str("inf")
        } else {
            s.serialize_f64(self.0)
        }
    }
}

impl<'de> Deserialize<'de> for ExponentField {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = ExponentField;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a number >= 1 or \"inf\"")
            }
            fn visit_f64<E: de::Error>(self, v: f64) -> Result<Self::Value, E> {
                Ok(ExponentField(v))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Self::Value, E> {
                Ok(ExponentField(v as f64))
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Self::Value, E> {
                Ok(ExponentField(v as f64))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<Self::Value, E> {
                if v == "inf" {
                    Ok(ExponentField(f64::INFINITY))
                } else {
                    Err(E::invalid_value(de::Unexpected::Str(v), &self))
                }
            }
        }
        d.deserialize_any(V)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FrameFile {
    dim: usize,
    count: usize,
    p: ExponentField,
    q: ExponentField,
    functionals: Vec<Vec<f64>>,
    vectors: Vec<Vec<f64>>,
}

fn check_rows(field: &str, rows: &[Vec<f64>], count: usize, dim: usize) -> Result<(), String> {
    if rows.len() != count {
        return Err(format!(
            "{field}: expected {count} rows (count), found {}",
            rows.len()
        ));
    }
    for (k, row) in rows.iter().enumerate() {
        if row.len() != dim {
            return Err(format!(
                "{field}[{k}]: expected {dim} entries (dim), found {}",
                row.len()
            ));
        }
    }
    Ok(())
}

fn exponent(field: &str, e: ExponentField) -> Result<Exponent, String> {
    Exponent::new(e.0)
        .map_err(|_| format!("{field}: exponent must be >= 1 or \"inf\", found {}", e.0))
}

/// Parses a frame document. `source` names the input in error messages.
pub fn parse_frame(text: &str, source: &Path) -> Result<FramePair, CliError> {
    let err = |message: String| CliError::Parse {
        path: source.to_path_buf(),
        message,
    };
    let file: FrameFile = serde_json::from_str(text).map_err(|e| err(e.to_string()))?;
    if file.dim == 0 {
        return Err(err("dim: must be at least 1".into()));
    }
    check_rows("functionals", &file.functionals, file.count, file.dim).map_err(err)?;
    check_rows("vectors", &file.vectors, file.count, file.dim).map_err(err)?;
    let q = exponent("q", file.q).map_err(err)?;
    let p = exponent("p", file.p).map_err(err)?;
    if file.count == 0 {
        return Err(err("count: must be at least 1".into()));
    }
    let x_space = PNormSpace::new(file.dim, q)?;
    let seq_space = PNormSpace::new(file.count, p)?;
    let functionals = Matrix::from_rows(&file.functionals)?;
    let vectors = Matrix::from_rows(&file.vectors)?.transpose();
    Ok(FramePair::new(x_space, seq_space, functionals, vectors)?)
}

pub fn read_frame(path: &Path) -> Result<FramePair, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_frame(&text, path)
}

/// Serializes with shortest round-trip decimals, so parsing the result
/// reproduces every entry bit for bit.
pub fn frame_to_json(frame: &FramePair) -> Result<String, CliError> {
    let finite = frame
        .functionals()
        .as_slice()
        .iter()
        .chain(frame.vectors().as_slice())
        .all(|v| v.is_finite());
    if !finite {
        return Err(CliError::Usage(
            "frame has non-finite entries and cannot be written".into(),
        ));
    }
    let file = FrameFile {
        dim: frame.dim(),
        count: frame.count(),
        p: ExponentField(frame.seq_space().p().value()),
        q: ExponentField(frame.x_space().p().value()),
        functionals: frame.functionals().to_rows(),
        vectors: frame.vectors().transpose().to_rows(),
    };
    let mut text = serde_json::to_string_pretty(&file).expect("finite values serialize");
    text.push('\n');
    Ok(text)
}

pub fn write_frame(path: &Path, frame: &FramePair) -> Result<(), CliError> {
    fs::write(path, frame_to_json(frame)?).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str) -> Result<FramePair, CliError> {
        parse_frame(text, Path::new("t.json"))
    }

    const BASIS: &str = r#"{"dim": 2, "count": 2, "p": 2, "q": "inf",
        "functionals": [[1, 0], [0, 1]], "vectors": [[1, 0], [0, 1]]}"#;

    #[test]
    fn parses_standard_basis() {
        let fr = parse(BASIS).unwrap();
        assert_eq!(fr.functionals(), &Matrix::identity(2));
        assert!(fr.x_space().p().is_infinite());
        assert_eq!(fr.seq_space().p().value(), 2.0);
    }

    #[test]
    fn vectors_are_transposed_on_load() {
        let fr = parse(r#"{"dim": 2, "count": 1, "p": 1, "q": 1, "functionals": [[1, 2]], "vectors": [[3, 4]]}"#).unwrap();
        assert_eq!(fr.vectors().shape(), (2, 1));
        assert_eq!(fr.vectors()[(1, 0)], 4.0);
    }

    #[test]
    fn awkward_doubles_round_trip_bitwise() {
        let vals = [
            0.1,
            1.0 / 3.0,
            -0.0,
            5e-324,
            1e-300,
            1.7976931348623157e308,
            -2.5e-7,
            123456789.12345679,
        ];
        let f = Matrix::from_fn(4, 2, |i, j| vals[i * 2 + j]);
        let t = Matrix::from_fn(2, 4, |i, j| vals[(j * 2 + i + 3) % 8]);
        let x = PNormSpace::new(2, Exponent::new(1.5).unwrap()).unwrap();
        let s = PNormSpace::new(4, Exponent::INFINITY).unwrap();
        let fr = FramePair::new(x, s, f, t).unwrap();
        let back = parse(&frame_to_json(&fr).unwrap()).unwrap();
        let bits = |m: &Matrix| m.as_slice().iter().map(|v| v.to_bits()).collect::<Vec<_>>();
        assert_eq!(bits(back.functionals()), bits(fr.functionals()));
        assert_eq!(bits(back.vectors()), bits(fr.vectors()));
        assert_eq!(back.x_space(), fr.x_space());
        assert_eq!(back.seq_space(), fr.seq_space());
    }

    #[test]
    fn errors_name_the_field_or_line() {
        let msg = |t: &str| parse(t).unwrap_err().to_string();
        assert!(msg(&BASIS.replace("\"q\"", "\"r\"")).contains("unknown field `r`"));
        assert!(
            msg(&BASIS.replace("[0, 1]], \"vectors\"", "[0]], \"vectors\""))
                .contains("functionals[1]")
        );
        assert!(msg(&BASIS.replace("\"count\": 2", "\"count\": 3"))
            .contains("functionals: expected 3 rows"));
        assert!(msg(&BASIS.replace("\"p\": 2", "\"p\": 0.5")).contains("p: exponent"));
        assert!(msg(&BASIS.replace("\"inf\"", "\"infinity\"")).contains("line 1"));
        assert!(msg("{\n\"dim\": 2,\n,").contains("line 3"));
        assert!(msg(&BASIS.replace("\"dim\": 2", "\"dim\": 0")).contains("dim"));
    }
}
