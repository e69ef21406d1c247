use std::fs;
use std::io::Read;
use std::path::Path;

use cable_slopes::{
    certify, diameter_lower_bound_with_grid, smith_normal_form, verify_certificate,
    CableSpaceModel, Error, Framing, IntMatrix, KnotDescription, TransferCertificate,
};
use serde_json::{json, Value};

use crate::{render, Cli, Command, Format};

pub const EXIT_OK: u8 = 0;
pub const EXIT_CHECK_FAILED: u8 = 1;
pub const EXIT_INPUT: u8 = 2;

pub struct Outcome {
    pub stdout: String,
    pub stderr: Option<String>,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String, passed: bool) -> Self {
        Outcome {
            stdout,
            stderr: None,
            code: if passed { EXIT_OK } else { EXIT_CHECK_FAILED },
        }
    }

    fn input_error(msg: impl std::fmt::Display) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: Some(format!("error: {msg}")),
            code: EXIT_INPUT,
        }
    }
}

fn pretty(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn read_input(path: &Path) -> Result<String, String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| format!("stdin: {e}"))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

pub fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Snf { input } => snf(cli, input),
        Command::CableHomology { p, q, orientation } => {
            match CableSpaceModel::build(
                (*p).into(),
                (*q).into(),
                &Framing::reference(),
                &Framing::reference(),
                (*orientation).into(),
            ) {
                Ok(m) => Outcome::ok(
                    match cli.format {
                        Format::Text => render::model(&m),
                        Format::Json => pretty(&m),
                    },
                    true,
                ),
                Err(e) => Outcome::input_error(e),
            }
        }
        Command::Transfer { p, q, orientation } => transfer(cli, *p, *q, (*orientation).into()),
        Command::Propagate { input } => propagate(cli, input),
        Command::Verify { inputs } => verify(cli, inputs),
    }
}

fn snf(cli: &Cli, input: &Path) -> Outcome {
    let text = match read_input(input) {
        Ok(t) => t,
        Err(e) => return Outcome::input_error(e),
    };
    let a = match IntMatrix::parse(&text) {
        Ok(a) => a,
        Err(e) => return Outcome::input_error(e),
    };
    let r = smith_normal_form(&a);
    let out = match cli.format {
        Format::Text => render::snf(&r),
        Format::Json => pretty(&json!({
            "u": r.u,
            "d": r.d,
            "v": r.v,
            "rank": r.rank(),
            "invariant_factors": render::invariant_factors(&r),
        })),
    };
    Outcome::ok(out, true)
}

fn transfer(cli: &Cli, p: i64, q: i64, orientation: cable_slopes::PlanarOrientation) -> Outcome {
    let cert = CableSpaceModel::build(
        p.into(),
        q.into(),
        &Framing::reference(),
        &Framing::reference(),
        orientation,
    )
    .and_then(|m| certify(&m, cli.grid));
    let cert = match cert {
        Ok(c) => c,
        Err(e) => return Outcome::input_error(e),
    };
    let report = verify_certificate(&cert, cli.grid);
    let out = match cli.format {
        Format::Text => render::transfer(&cert, &report, cli.grid),
        Format::Json => pretty(&cert),
    };
    Outcome::ok(out, report.passed())
}

fn load_description(path: &Path) -> Result<KnotDescription, String> {
    let text = read_input(path)?;
    KnotDescription::from_json(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn propagate(cli: &Cli, input: &Path) -> Outcome {
    let d = match load_description(input) {
        Ok(d) => d,
        Err(e) => return Outcome::input_error(e),
    };
    match diameter_lower_bound_with_grid(&d, cli.grid) {
        Ok(cert) => Outcome::ok(
            match cli.format {
                Format::Text => render::diameter(&d, &cert),
                Format::Json => pretty(&cert),
            },
            true,
        ),
        Err(e) => Outcome::input_error(e),
    }
}

enum Document {
    Description(Box<KnotDescription>),
    Certificate(Box<TransferCertificate>),
}

fn classify(path: &Path) -> Result<Document, String> {
    let text = read_input(path)?;
    let v: Value = serde_json::from_str(&text)
        .map_err(|e| format!("{}: {}", path.display(), Error::Parse(e.to_string())))?;
    if v.get("model").is_some() && v.get("map").is_some() {
        serde_json::from_value(v)
            .map(|c| Document::Certificate(Box::new(c)))
            .map_err(|e| format!("{}: {}", path.display(), Error::Parse(e.to_string())))
    } else if v.get("base").is_some() {
        KnotDescription::from_json(&text)
            .map(|d| Document::Description(Box::new(d)))
            .map_err(|e| format!("{}: {e}", path.display()))
    } else {
        Err(format!(
            "{}: neither a knot description (`base`) nor a transfer certificate (`model`, `map`)",
            path.display()
        ))
    }
}

struct Verified {
    text: String,
    json: Value,
    passed: bool,
}

fn verify_transfer(path: &Path, cert: &TransferCertificate, grid: u32) -> Verified {
    let mut report = verify_certificate(cert, grid);
    let replay = certify(&cert.model, cert.witnesses.grid);
    let identical = replay
        .as_ref()
        .is_ok_and(|r| serde_json::to_value(r).ok() == serde_json::to_value(cert).ok());
    report.checks.push(cable_slopes::transfer::Check {
        name: "certificate regenerates identically".into(),
        passed: identical,
        detail: (!identical).then(|| match &replay {
            Ok(_) => "regenerated certificate differs".to_string(),
            Err(e) => e.to_string(),
        }),
    });
    Verified {
        text: render::verified_transfer(path, cert, &report, grid),
        json: json!({
            "file": path.display().to_string(),
            "kind": "transfer_certificate",
            "passed": report.passed(),
            "map": cert.map,
            "report": report,
        }),
        passed: report.passed(),
    }
}

fn verify_description(path: &Path, d: &KnotDescription, grid: u32) -> Result<Verified, Error> {
    let cert = diameter_lower_bound_with_grid(d, grid)?;
    let reports: Vec<_> = cert
        .transfers
        .iter()
        .map(|t| verify_certificate(t, grid))
        .collect();
    let corollary = cert.corollary(d);
    let passed =
        reports.iter().all(|r| r.passed()) && corollary.as_ref().is_none_or(|c| c.satisfied);
    Ok(Verified {
        text: render::verified_description(path, d, &cert, &reports, corollary.as_ref()),
        json: json!({
            "file": path.display().to_string(),
            "kind": "knot_description",
            "passed": passed,
            "certificate": cert,
            "transfer_reports": reports,
            "corollary_c": corollary,
        }),
        passed,
    })
}

fn verify(cli: &Cli, inputs: &[std::path::PathBuf]) -> Outcome {
    let mut results = Vec::new();
    for path in inputs {
        let doc = match classify(path) {
            Ok(d) => d,
            Err(e) => return Outcome::input_error(e),
        };
        let v = match &doc {
            Document::Certificate(c) => verify_transfer(path, c, cli.grid),
            Document::Description(d) => match verify_description(path, d, cli.grid) {
                Ok(v) => v,
                Err(e) => return Outcome::input_error(format!("{}: {e}", path.display())),
            },
        };
        results.push(v);
    }
    let passed = results.iter().all(|r| r.passed);
    let out = match cli.format {
        Format::Text => results
            .iter()
            .map(|r| r.text.as_str())
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Json => pretty(&results.iter().map(|r| &r.json).collect::<Vec<_>>()),
    };
    Outcome::ok(out, passed)
}
