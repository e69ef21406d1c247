use std::fmt::Write;
use std::path::Path;

use cable_slopes::{
    CableSpaceModel, CorollaryReport, DiameterCertificate, ExtendedRational, Framing,
    KnotDescription, SnfResult, TransferCertificate, VerificationReport,
};

fn framing(f: &Framing) -> String {
    format!(
        "mu = {}, lambda = {}, sign {}",
        f.mu(),
        f.lambda(),
        f.sign()
    )
}

fn vector<T: std::fmt::Display>(v: &[T]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

fn indented(block: &str) -> String {
    block.lines().map(|l| format!("  {l}\n")).collect()
}

pub fn invariant_factors(r: &SnfResult) -> Vec<String> {
    r.d.diagonal().iter().map(ToString::to_string).collect()
}

pub fn snf(r: &SnfResult) -> String {
    let mut s = String::new();
    writeln!(s, "U =\n{}", indented(&r.u.to_string())).unwrap();
    writeln!(s, "D =\n{}", indented(&r.d.to_string())).unwrap();
    writeln!(s, "V =\n{}", indented(&r.v.to_string())).unwrap();
    writeln!(s, "rank {}", r.rank()).unwrap();
    write!(s, "invariant factors {}", vector(&invariant_factors(r))).unwrap();
    s
}

pub fn model(m: &CableSpaceModel) -> String {
    let mut s = String::new();
    writeln!(
        s,
        "cable space (p, q) = ({}, {}), orientation {}",
        m.p,
        m.q,
        format!("{:?}", m.orientation).to_lowercase()
    )
    .unwrap();
    writeln!(
        s,
        "generators x, m, l; relation {}",
        vector(m.presentation.row(0))
    )
    .unwrap();
    writeln!(s, "H1(N; Z) = {}", m.h1).unwrap();
    writeln!(s, "outer framing  {}", framing(&m.f_outer)).unwrap();
    writeln!(s, "inner framing  {}", framing(&m.f_inner)).unwrap();
    writeln!(s, "images in H1(N)").unwrap();
    writeln!(s, "  mu      -> {}", vector(&m.img_mu)).unwrap();
    writeln!(s, "  lambda  -> {}", vector(&m.img_lambda)).unwrap();
    writeln!(s, "  mu'     -> {}", vector(&m.img_mu_prime)).unwrap();
    writeln!(s, "  lambda' -> {}", vector(&m.img_lambda_prime)).unwrap();
    writeln!(
        s,
        "d[P] = {} in (mu, lambda, mu', lambda')",
        vector(&m.boundary_p)
    )
    .unwrap();
    write!(
        s,
        "zeta = {}, t = {}, lambda coefficient = {}, theta = {}, eta = {}",
        m.zeta, m.t, m.lambda_coefficient, m.theta, m.eta
    )
    .unwrap();
    s
}

pub fn transfer(cert: &TransferCertificate, report: &VerificationReport, grid: u32) -> String {
    let m = &cert.model;
    let w = &cert.witnesses;
    let mut s = String::new();
    writeln!(
        s,
        "cable space (p, q) = ({}, {}), orientation {}",
        m.p,
        m.q,
        format!("{:?}", m.orientation).to_lowercase()
    )
    .unwrap();
    writeln!(s, "transfer law  nu'(phi(s)) = epsilon*q^2*nu(s) + u").unwrap();
    writeln!(s, "  epsilon = {}", cert.map.epsilon).unwrap();
    writeln!(s, "  q^2     = {}", cert.map.q_squared()).unwrap();
    writeln!(s, "  u       = {}", cert.map.u).unwrap();
    writeln!(s, "  map     {}", cert.map).unwrap();
    writeln!(s, "witnesses").unwrap();
    writeln!(
        s,
        "  d[P]             {}   zeta = {}",
        vector(&w.boundary_p),
        w.zeta
    )
    .unwrap();
    writeln!(s, "  mu               = {} * mu'", w.meridian_coefficient).unwrap();
    writeln!(
        s,
        "  lambda'          = {} * mu + {} * lambda   theta = {}, eta = {}",
        w.t, w.lambda_coefficient, w.theta, w.eta
    )
    .unwrap();
    for rm in &w.rational_multiples {
        writeln!(
            s,
            "  phi({}) = {}   iota^2 = {} * iota^1",
            rm.source, rm.image, rm.r
        )
        .unwrap();
    }
    writeln!(s, "verification (grid {grid})").unwrap();
    write!(s, "{report}").unwrap();
    write!(
        s,
        "{}",
        if report.passed() {
            "all checks passed"
        } else {
            "verification FAILED"
        }
    )
    .unwrap();
    s
}

fn slopes(v: &[ExtendedRational]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}

pub fn diameter(d: &KnotDescription, cert: &DiameterCertificate) -> String {
    let mut s = String::new();
    for (i, level) in cert.levels.iter().enumerate() {
        let label = if i == 0 {
            "base".to_string()
        } else {
            let c = &d.cablings[i - 1];
            format!("cable {i} (p, q) = ({}, {})", c.p, c.q)
        };
        writeln!(s, "level {i}: {label}").unwrap();
        writeln!(s, "  framing  {}", framing(&level.framing)).unwrap();
        writeln!(s, "  slopes   {}", slopes(&level.slopes)).unwrap();
        writeln!(s, "  diameter {}", level.diameter).unwrap();
        if i > 0 {
            writeln!(s, "  map      {}", cert.transfers[i - 1].map).unwrap();
        }
    }
    for tag in &cert.tags {
        writeln!(
            s,
            "{:?} at level {}: {}",
            tag.theorem, tag.level, tag.statement
        )
        .unwrap();
    }
    if let Some(h1) = &cert.ambient_h1 {
        writeln!(s, "ambient H1 = {h1}").unwrap();
    }
    writeln!(s, "gitk {}", cert.gitk).unwrap();
    writeln!(s, "route {}", cert.route).unwrap();
    if let Some(r) = &cert.reason {
        writeln!(s, "reason {r}").unwrap();
    }
    write!(s, "d_K >= {}", cert.d_lower).unwrap();
    s
}

pub fn verified_transfer(
    path: &Path,
    cert: &TransferCertificate,
    report: &VerificationReport,
    grid: u32,
) -> String {
    let mut s = String::new();
    writeln!(
        s,
        "{}: transfer certificate (p, q) = ({}, {})",
        path.display(),
        cert.model.p,
        cert.model.q
    )
    .unwrap();
    writeln!(s, "  map {}", cert.map).unwrap();
    writeln!(s, "verification (grid {grid})").unwrap();
    write!(s, "{report}").unwrap();
    write!(s, "{}", if report.passed() { "PASS" } else { "FAIL" }).unwrap();
    s
}

pub fn verified_description(
    path: &Path,
    d: &KnotDescription,
    cert: &DiameterCertificate,
    reports: &[VerificationReport],
    corollary: Option<&CorollaryReport>,
) -> String {
    let mut s = String::new();
    writeln!(
        s,
        "{}: knot description with {} cabling(s)",
        path.display(),
        d.cablings.len()
    )
    .unwrap();
    for (i, (t, r)) in cert.transfers.iter().zip(reports).enumerate() {
        writeln!(
            s,
            "cabling {} (p, q) = ({}, {}): {}",
            i + 1,
            t.model.p,
            t.model.q,
            t.map
        )
        .unwrap();
        write!(s, "{r}").unwrap();
    }
    if cert.gitk {
        writeln!(
            s,
            "generalized iterated torus knot: Theorem B, case (ii); no diameter bound asserted"
        )
        .unwrap();
    }
    writeln!(s, "route {}", cert.route).unwrap();
    writeln!(s, "d_K >= {}", cert.d_lower).unwrap();
    let mut passed = reports.iter().all(VerificationReport::passed);
    match corollary {
        Some(c) => {
            let branch = match c.branch {
                Some(b) => format!("{b:?}"),
                None => "neither branch".to_string(),
            };
            writeln!(
                s,
                "Corollary C: q = {}, threshold 2q^2 = {}, d_K >= {}, gitk {}: {} ({branch})",
                c.q,
                c.threshold,
                c.d_lower,
                c.gitk,
                if c.satisfied {
                    "satisfied"
                } else {
                    "NOT satisfied"
                }
            )
            .unwrap();
            passed &= c.satisfied;
        }
        None => writeln!(s, "Corollary C: not applicable").unwrap(),
    }
    write!(s, "{}", if passed { "PASS" } else { "FAIL" }).unwrap();
    s
}
