//! One function per subcommand. Each returns a [`Report`] whose
//! `exit_code` encodes whether the property held.

use std::fs;
use std::path::{Path, PathBuf};

use pasf_core::duality::{canonical_dual, canonical_dual_bounds, is_dual};
use pasf_core::generators::{random_dual, Seed};
use pasf_core::orthogonality::{is_orthogonal, scalar_interpolate, InterpolationOperators};
use pasf_core::similarity::{are_similar, witness_from_frames};
use pasf_core::{Error, FramePair, NormBound};

use crate::format::{read_frame, write_frame};
use crate::report::{fmt_g, Report};
use crate::CliError;

fn name(path: &Path) -> String {
    path.display().to_string()
}

fn bound_text(b: &NormBound) -> String {
    if b.exact {
        fmt_g(b.value())
    } else {
        format!("[{}, {}]", fmt_g(b.lower), fmt_g(b.upper))
    }
}

fn emit(report: &mut Report, frame: &FramePair, out: Option<&Path>) -> Result<(), CliError> {
    report.matrix("functionals", frame.functionals());
    report.matrix("vectors", &frame.vectors().transpose());
    if let Some(path) = out {
        write_frame(path, frame)?;
        report.outputs.push(name(path));
    }
    Ok(())
}

fn read_pair(a: &Path, b: &Path) -> Result<(FramePair, FramePair), CliError> {
    let (f1, f2) = (read_frame(a)?, read_frame(b)?);
    if !f1.same_spaces(&f2) {
        return Err(Error::SpaceMismatch.into());
    }
    Ok((f1, f2))
}

pub fn validate(path: &Path, tol: f64) -> Result<Report, CliError> {
    let frame = read_frame(path)?;
    let mut r = Report::new("validate", &[name(path)], tol);
    match frame.validate(tol) {
        Ok(rep) => {
            let mut text = format!(
                "valid, a={}, b={}",
                bound_text(&rep.lower_bound),
                bound_text(&rep.upper_bound)
            );
            if rep.parseval {
                text.push_str(", Parseval");
            }
            r.verdict(true, text);
            r.bound("a", &rep.lower_bound);
            r.bound("b", &rep.upper_bound);
            r.number("rcond(S)", rep.rcond);
            r.number("max|S - I|", rep.frame_op.matrix().max_abs_diff_identity());
            r.number("rank(analysis)", frame.functionals().rank(tol) as f64);
            r.number("rank(synthesis)", frame.vectors().rank(tol) as f64);
            r.matrix("S", rep.frame_op.matrix());
        }
        Err(Error::NotAFrame { rank, dim }) => {
            r.verdict(false, format!("NotAFrame, rank {rank} of {dim}"));
            r.number("rank(S)", rank as f64);
        }
        Err(e) => return Err(e.into()),
    }
    Ok(r)
}

pub fn canonical(path: &Path, out: Option<&Path>, tol: f64) -> Result<Report, CliError> {
    let frame = read_frame(path)?;
    let report = frame.validate(tol)?;
    let dual = canonical_dual(&frame, tol)?;
    let (a, b) = canonical_dual_bounds(&report);
    let mut r = Report::new("canonical-dual", &[name(path)], tol);
    r.verdict(
        true,
        format!("canonical dual, a={}, b={}", bound_text(&a), bound_text(&b)),
    );
    r.bound("a", &a);
    r.bound("b", &b);
    r.number("rcond(S)", report.rcond);
    emit(&mut r, &dual, out)?;
    Ok(r)
}

pub fn check_dual(a: &Path, b: &Path, tol: f64) -> Result<Report, CliError> {
    let (frame, cand) = read_pair(a, b)?;
    let holds = is_dual(&frame, &cand, tol)?;
    let mut r = Report::new("check-dual", &[name(a), name(b)], tol);
    r.verdict(holds, if holds { "dual" } else { "not dual" });
    r.number(
        "max|T_tau T_g - I|",
        (frame.vectors() * cand.functionals()).max_abs_diff_identity(),
    );
    r.number(
        "max|T_omega T_f - I|",
        (cand.vectors() * frame.functionals()).max_abs_diff_identity(),
    );
    Ok(r)
}

pub fn check_orthogonal(a: &Path, b: &Path, tol: f64) -> Result<Report, CliError> {
    let (f1, f2) = read_pair(a, b)?;
    let holds = is_orthogonal(&f1, &f2, tol)?;
    let mut r = Report::new("check-orthogonal", &[name(a), name(b)], tol);
    r.verdict(
        holds,
        if holds {
            "orthogonal"
        } else {
            "not orthogonal"
        },
    );
    r.number(
        "max|T_tau T_g|",
        (f1.vectors() * f2.functionals()).max_abs(),
    );
    r.number(
        "max|T_omega T_f|",
        (f2.vectors() * f1.functionals()).max_abs(),
    );
    Ok(r)
}

pub fn similarity(a: &Path, b: &Path, tol: f64) -> Result<Report, CliError> {
    let (f1, f2) = read_pair(a, b)?;
    let holds = are_similar(&f1, &f2, tol)?;
    let mut r = Report::new("similarity", &[name(a), name(b)], tol);
    r.verdict(holds, if holds { "similar" } else { "not similar" });
    let diff = f1
        .projection(tol)?
        .matrix()
        .max_abs_diff(f2.projection(tol)?.matrix());
    r.number("max|P_1 - P_2|", diff);
    if holds {
        let w = witness_from_frames(&f1, &f2, tol)?;
        r.matrix("T_fg", w.t_fg().matrix());
        r.matrix("T_tau_omega", w.t_tau_omega().matrix());
    }
    Ok(r)
}

pub fn interpolate(
    a: &Path,
    b: &Path,
    scalars: [f64; 4],
    out: Option<&Path>,
    tol: f64,
) -> Result<Report, CliError> {
    let (f1, f2) = read_pair(a, b)?;
    let [sa, sb, sc, sd] = scalars;
    let stitched = scalar_interpolate(&f1, &f2, sa, sb, sc, sd, tol)?;
    let residual = stitched.frame_operator().matrix().max_abs_diff_identity();
    let holds = residual <= tol;
    let mut r = Report::new("interpolate", &[name(a), name(b)], tol);
    r.verdict(
        holds,
        if holds {
            "interpolated, Parseval"
        } else {
            "interpolated, not Parseval"
        },
    );
    r.number(
        "max|CA + DB - I|",
        InterpolationOperators::scalars(&f1, sa, sb, sc, sd).contract_residual(),
    );
    r.number("max|S - I|", residual);
    emit(&mut r, &stitched, out)?;
    Ok(r)
}

pub fn sample_duals(
    path: &Path,
    count: usize,
    seed: u64,
    out_dir: Option<&Path>,
    tol: f64,
) -> Result<Report, CliError> {
    let frame = read_frame(path)?;
    if let Some(dir) = out_dir {
        fs::create_dir_all(dir).map_err(|source| CliError::Io {
            path: dir.to_path_buf(),
            source,
        })?;
    }
    let mut r = Report::new("sample-duals", &[name(path)], tol);
    let mut seeds = Seed(seed).rng();
    let mut all_dual = true;
    for k in 0..count {
        let cand = random_dual(&frame, Seed(seeds.next_u64()), tol)?;
        all_dual &= is_dual(&frame, &cand.frame, tol)?;
        r.number(
            format!("dual {k}: rcond(gate)"),
            cand.gate_rcond.unwrap_or(f64::NAN),
        );
        r.number(
            format!("dual {k}: max|T_tau T_g - I|"),
            (frame.vectors() * cand.frame.functionals()).max_abs_diff_identity(),
        );
        if let Some(dir) = out_dir {
            let file: PathBuf = dir.join(format!("dual_{k:03}.json"));
            write_frame(&file, &cand.frame)?;
            r.outputs.push(name(&file));
        }
    }
    r.verdict(all_dual, format!("sampled {count} duals"));
    Ok(r)
}

pub fn factorize(path: &Path, out: Option<&Path>, tol: f64) -> Result<Report, CliError> {
    let frame = read_frame(path)?;
    let (u, v) = frame.factorize(tol)?;
    let rebuilt = FramePair::from_factorization(&u, &v, tol)?;
    let vu = v.compose(&u)?;
    let mut r = Report::new("factorize", &[name(path)], tol);
    r.verdict(true, "factorized, S = VU");
    r.number(
        "max|VU - S|",
        vu.matrix().max_abs_diff(frame.frame_operator().matrix()),
    );
    r.number("max|rebuilt - frame|", rebuilt.max_abs_diff(&frame));
    r.matrix("U", u.matrix());
    r.matrix("V", v.matrix());
    if let Some(p) = out {
        write_frame(p, &rebuilt)?;
        r.outputs.push(name(p));
    }
    Ok(r)
}
