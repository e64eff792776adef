//! One-report-per-input analysis engine behind the graph-reading verbs.
//!
//! Every input produces a single JSON line on stdout: the command name, an
//! FNV-1a digest of the input bytes, the wall time of the core operation
//! (excluding parsing, verification, and serialization), the result payload,
//! and — for commands that produce a certificate — the in-process
//! verification status. A certificate that fails its own verification aborts
//! the whole batch with exit code 3; that path is never supposed to happen
//! and indicates a bug, so it is loud.
//!
//! A member graph that merely lacks the requested structure (no Hamiltonian
//! cycle, say) is still a successful query: the report carries the
//! obstruction and the exit code stays 0. Exit code 1 is reserved for domain
//! rejections — non-members and disconnected inputs.

use ncpath_core::domination::{mcds, mds, mids, steiner_tree, DomResult, DominationError};
use ncpath_core::graph::Graph;
use ncpath_core::hamiltonicity::{
    hamiltonian_cycle, hamiltonian_path, min_leaf_spanning_tree, HamiltonicityError,
};
use ncpath_core::model::to_dot;
use ncpath_core::recognition::{
    find_claw_chordal, recognize, verify_certificate, Certificate, ClawSearch, TargetClass,
    Verdict,
};
use serde::Serialize;
use serde_json::{json, Value};
use std::io::Read;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

pub const OK: u8 = 0;
pub const NEGATIVE: u8 = 1;
pub const USAGE: u8 = 2;
pub const VERIFY_FAILED: u8 = 3;

/// What to do with each input graph.
pub enum Verb {
    Recognize(TargetClass),
    Model { dot: bool },
    Claw,
    Mds,
    Mids,
    Mcds,
    Steiner(Vec<usize>),
    HamCycle,
    HamPath,
    MinLeaf,
}

impl Verb {
    pub fn name(&self) -> &'static str {
        match self {
            Verb::Recognize(_) => "recognize",
            Verb::Model { .. } => "model",
            Verb::Claw => "claw",
            Verb::Mds => "mds",
            Verb::Mids => "mids",
            Verb::Mcds => "mcds",
            Verb::Steiner(_) => "steiner",
            Verb::HamCycle => "hamcycle",
            Verb::HamPath => "hampath",
            Verb::MinLeaf => "minleaf",
        }
    }
}

/// The JSON line printed per input.
#[derive(Serialize)]
struct RunReport<'a> {
    command: &'a str,
    /// FNV-1a 64 digest of the raw input bytes, `fnv1a:` prefixed.
    input: String,
    /// Wall time of the core operation only.
    wall_time_ns: u128,
    result: Value,
    /// `"verified"` when `verify_certificate` accepted the certificate in
    /// this process; absent for commands that emit no certificate.
    #[serde(skip_serializing_if = "Option::is_none")]
    verification: Option<String>,
}

/// Outcome of one core-operation call, before report assembly.
struct Exec {
    result: Value,
    verification: Option<String>,
    severity: u8,
    /// Verbatim stdout replacing the JSON report (DOT rendering).
    raw: Option<String>,
    wall: u128,
}

impl Exec {
    fn plain(result: Value, wall: u128) -> Exec {
        Exec { result, verification: None, severity: OK, raw: None, wall }
    }

    fn rejection(result: Value, wall: u128) -> Exec {
        Exec { result, verification: None, severity: NEGATIVE, raw: None, wall }
    }
}

/// Everything one input produced, held until its turn in the output order.
struct FileOutcome {
    /// Printed verbatim (already newline-terminated).
    stdout_text: Option<String>,
    stderr_msg: Option<String>,
    severity: u8,
    /// A certificate failed its self-check; aborts the batch.
    verify_failure: Option<String>,
}

impl FileOutcome {
    fn usage(msg: String) -> FileOutcome {
        FileOutcome {
            stdout_text: None,
            stderr_msg: Some(msg),
            severity: USAGE,
            verify_failure: None,
        }
    }
}

fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

fn digest_label(text: &str) -> String {
    format!("fnv1a:{:016x}", fnv1a(text.as_bytes()))
}

fn read_stdin() -> Result<String, String> {
    let mut text = String::new();
    std::io::stdin()
        .read_to_string(&mut text)
        .map_err(|e| format!("stdin: {e}"))?;
    Ok(text)
}

fn read_input(path: &str, stdin_text: Option<&str>) -> Result<String, String> {
    if path == "-" {
        return Ok(stdin_text.expect("stdin is pre-read when any input is `-`").to_string());
    }
    std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, u128) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed().as_nanos())
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report payloads serialize")
}

/// Shapes a domination-family result or rejection into an [`Exec`].
fn domination_exec(res: Result<DomResult, DominationError>, wall: u128) -> Exec {
    match res {
        Ok(r) => Exec::plain(to_value(&r), wall),
        Err(e) => {
            let severity = match e {
                DominationError::NoTerminals | DominationError::TerminalOutOfRange(_) => USAGE,
                _ => NEGATIVE,
            };
            let msg = e.to_string();
            let payload = match e {
                DominationError::NotInClass(w) => json!({ "error": msg, "witness": w }),
                _ => json!({ "error": msg }),
            };
            Exec { result: payload, verification: None, severity, raw: None, wall }
        }
    }
}

fn traversal_rejection(e: HamiltonicityError, wall: u128) -> Exec {
    let msg = e.to_string();
    let payload = match e {
        HamiltonicityError::NotInClass(w) => json!({ "error": msg, "witness": w }),
        HamiltonicityError::Disconnected => json!({ "error": msg }),
    };
    Exec::rejection(payload, wall)
}

/// Runs one verb on one parsed graph. `Err` is a certificate that failed
/// its own verification — a bug, surfaced as an abort.
fn execute(verb: &Verb, g: &Graph) -> Result<Exec, String> {
    match verb {
        Verb::Recognize(class) => {
            let (res, wall) = timed(|| recognize(g, *class));
            match res {
                Ok(cert) => {
                    verify_certificate(g, &cert)?;
                    let severity =
                        if cert.verdict == Verdict::Member { OK } else { NEGATIVE };
                    Ok(Exec {
                        result: to_value(&cert),
                        verification: Some("verified".to_string()),
                        severity,
                        raw: None,
                        wall,
                    })
                }
                Err(e) => Ok(Exec::rejection(json!({ "error": e.to_string() }), wall)),
            }
        }
        Verb::Model { dot } => {
            let (res, wall) = timed(|| recognize(g, TargetClass::NcPathTree));
            match res {
                Ok(cert) => {
                    verify_certificate(g, &cert)?;
                    if cert.verdict == Verdict::NonMember {
                        return Ok(Exec {
                            result: to_value(&cert),
                            verification: Some("verified".to_string()),
                            severity: NEGATIVE,
                            raw: None,
                            wall,
                        });
                    }
                    let model = cert
                        .model
                        .as_ref()
                        .expect("a verified member certificate carries its model");
                    let (result, raw) = if *dot {
                        (Value::Null, Some(to_dot(model)))
                    } else {
                        (to_value(model), None)
                    };
                    Ok(Exec {
                        result,
                        verification: Some("verified".to_string()),
                        severity: OK,
                        raw,
                        wall,
                    })
                }
                Err(e) => Ok(Exec::rejection(json!({ "error": e.to_string() }), wall)),
            }
        }
        Verb::Claw => {
            if !g.is_connected() {
                return Ok(Exec::rejection(json!({ "error": "graph is not connected" }), 0));
            }
            let (res, wall) = timed(|| find_claw_chordal(g));
            Ok(match res {
                Ok(ClawSearch::Found(w)) => {
                    Exec::plain(json!({ "found": true, "witness": w }), wall)
                }
                Ok(ClawSearch::ClawFree(_)) => Exec::plain(json!({ "found": false }), wall),
                Err(hole) => {
                    Exec::rejection(json!({ "error": "not-chordal", "hole": hole.cycle }), wall)
                }
            })
        }
        Verb::Mds | Verb::Mids | Verb::Mcds => {
            let f: fn(&Graph) -> Result<DomResult, DominationError> = match verb {
                Verb::Mds => mds,
                Verb::Mids => mids,
                _ => mcds,
            };
            let (res, wall) = timed(|| f(g));
            Ok(domination_exec(res, wall))
        }
        Verb::Steiner(terminals) => {
            let (res, wall) = timed(|| steiner_tree(g, terminals));
            Ok(domination_exec(res, wall))
        }
        Verb::HamCycle => {
            let (res, wall) = timed(|| hamiltonian_cycle(g));
            Ok(match res {
                Ok(out) => Exec::plain(to_value(&out), wall),
                Err(e) => traversal_rejection(e, wall),
            })
        }
        Verb::HamPath => {
            let (res, wall) = timed(|| hamiltonian_path(g));
            Ok(match res {
                Ok(out) => Exec::plain(to_value(&out), wall),
                Err(e) => traversal_rejection(e, wall),
            })
        }
        Verb::MinLeaf => {
            let (res, wall) = timed(|| min_leaf_spanning_tree(g));
            Ok(match res {
                Ok(out) => Exec::plain(to_value(&out), wall),
                Err(e) => traversal_rejection(e, wall),
            })
        }
    }
}

fn analyze_one(verb: &Verb, path: &str, stdin_text: Option<&str>) -> FileOutcome {
    let text = match read_input(path, stdin_text) {
        Ok(t) => t,
        Err(e) => return FileOutcome::usage(format!("{}: {e}", verb.name())),
    };
    let g = match Graph::parse(&text) {
        Ok(g) => g,
        Err(e) => return FileOutcome::usage(format!("{}: {path}: {e}", verb.name())),
    };
    match execute(verb, &g) {
        Ok(exec) => {
            let stdout_text = if let Some(mut raw) = exec.raw {
                if !raw.ends_with('\n') {
                    raw.push('\n');
                }
                raw
            } else {
                let report = RunReport {
                    command: verb.name(),
                    input: digest_label(&text),
                    wall_time_ns: exec.wall,
                    result: exec.result,
                    verification: exec.verification,
                };
                let mut line = serde_json::to_string(&report).expect("reports serialize");
                line.push('\n');
                line
            };
            FileOutcome {
                stdout_text: Some(stdout_text),
                stderr_msg: None,
                severity: exec.severity,
                verify_failure: None,
            }
        }
        Err(why) => FileOutcome {
            stdout_text: None,
            stderr_msg: None,
            severity: VERIFY_FAILED,
            verify_failure: Some(format!(
                "{}: {path}: certificate failed verification: {why}",
                verb.name()
            )),
        },
    }
}

/// Prints one outcome in order; a verification failure aborts the batch.
fn drain(out: FileOutcome, worst: &mut u8) -> Result<(), u8> {
    if let Some(why) = out.verify_failure {
        eprintln!("{why}");
        return Err(VERIFY_FAILED);
    }
    if let Some(msg) = out.stderr_msg {
        eprintln!("{msg}");
    }
    if let Some(text) = out.stdout_text {
        print!("{text}");
    }
    *worst = (*worst).max(out.severity);
    Ok(())
}

/// Work-steals indices over `jobs` threads; results land in input order.
fn run_pool<F>(count: usize, jobs: usize, job: F) -> Vec<FileOutcome>
where
    F: Fn(usize) -> FileOutcome + Sync,
{
    let slots: Vec<Mutex<Option<FileOutcome>>> = (0..count).map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..jobs.min(count) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= count {
                    break;
                }
                let out = job(i);
                *slots[i].lock().expect("worker panics abort the scope") = Some(out);
            });
        }
    });
    slots
        .into_iter()
        .map(|slot| {
            slot.into_inner()
                .expect("scope joined every worker")
                .expect("every index was claimed exactly once")
        })
        .collect()
}

/// Runs `verb` over every input and returns the process exit code: the
/// worst severity seen, or 3 immediately on a failed self-verification.
pub fn analyze(verb: &Verb, files: &[String], jobs: usize) -> u8 {
    let stdin_text = if files.iter().any(|f| f == "-") {
        match read_stdin() {
            Ok(t) => Some(t),
            Err(e) => {
                eprintln!("{}: {e}", verb.name());
                return USAGE;
            }
        }
    } else {
        None
    };
    let job = |i: usize| analyze_one(verb, &files[i], stdin_text.as_deref());
    let mut worst = OK;
    if jobs <= 1 || files.len() <= 1 {
        for i in 0..files.len() {
            if let Err(code) = drain(job(i), &mut worst) {
                return code;
            }
        }
    } else {
        for out in run_pool(files.len(), jobs, job) {
            if let Err(code) = drain(out, &mut worst) {
                return code;
            }
        }
    }
    worst
}

/// Re-checks a stored certificate against its graph; exit 3 when invalid.
pub fn verify(graph_path: &str, cert_path: &str) -> u8 {
    if graph_path == "-" && cert_path == "-" {
        eprintln!("verify: only one of GRAPH and CERTIFICATE may be stdin");
        return USAGE;
    }
    let stdin_text = if graph_path == "-" || cert_path == "-" {
        match read_stdin() {
            Ok(t) => Some(t),
            Err(e) => {
                eprintln!("verify: {e}");
                return USAGE;
            }
        }
    } else {
        None
    };
    let graph_text = match read_input(graph_path, stdin_text.as_deref()) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("verify: {e}");
            return USAGE;
        }
    };
    let cert_text = match read_input(cert_path, stdin_text.as_deref()) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("verify: {e}");
            return USAGE;
        }
    };
    let g = match Graph::parse(&graph_text) {
        Ok(g) => g,
        Err(e) => {
            eprintln!("verify: {graph_path}: {e}");
            return USAGE;
        }
    };
    let cert: Certificate = match serde_json::from_str(&cert_text) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("verify: {cert_path}: {e}");
            return USAGE;
        }
    };
    let (res, wall) = timed(|| verify_certificate(&g, &cert));
    let (result, verification, code) = match res {
        Ok(()) => (json!({ "valid": true }), "verified".to_string(), OK),
        Err(why) => {
            eprintln!("verify: certificate failed verification: {why}");
            (json!({ "valid": false, "reason": why }), "failed".to_string(), VERIFY_FAILED)
        }
    };
    let report = RunReport {
        command: "verify",
        input: digest_label(&graph_text),
        wall_time_ns: wall,
        result,
        verification: Some(verification),
    };
    println!("{}", serde_json::to_string(&report).expect("reports serialize"));
    code
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sun3() -> Graph {
        let edges =
            [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (1, 4), (2, 4), (0, 5), (2, 5)];
        Graph::from_edges(6, &edges).unwrap()
    }

    fn net() -> Graph {
        let edges = [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)];
        Graph::from_edges(6, &edges).unwrap()
    }

    #[test]
    fn digest_is_stable_and_prefixed() {
        // Reference FNV-1a 64 values, straight from the offset basis.
        assert_eq!(digest_label(""), "fnv1a:cbf29ce484222325");
        assert_eq!(digest_label("a"), "fnv1a:af63dc4c8601ec8c");
        assert_eq!(digest_label("3 2\n0 1\n1 2\n"), digest_label("3 2\n0 1\n1 2\n"));
    }

    #[test]
    fn recognize_member_is_verified_and_ok() {
        let exec = execute(&Verb::Recognize(TargetClass::NcPathTree), &sun3()).unwrap();
        assert_eq!(exec.severity, OK);
        assert_eq!(exec.verification.as_deref(), Some("verified"));
        assert_eq!(exec.result["verdict"], "member");
    }

    #[test]
    fn recognize_non_member_is_negative_with_witness() {
        let exec = execute(&Verb::Recognize(TargetClass::ProperInterval), &net()).unwrap();
        assert_eq!(exec.severity, NEGATIVE);
        assert_eq!(exec.result["verdict"], "non-member");
        assert_eq!(exec.result["witness"]["kind"], "net");
    }

    #[test]
    fn model_dot_renders_raw_output() {
        let exec = execute(&Verb::Model { dot: true }, &sun3()).unwrap();
        let dot = exec.raw.expect("members render to DOT");
        assert!(dot.starts_with("graph"));
        assert!(dot.contains("triangle"), "the 3-sun model has a junction");
    }

    #[test]
    fn structural_negatives_stay_successful() {
        // The net has a Hamiltonian-path obstruction but is in the class;
        // the query itself succeeds.
        let exec = execute(&Verb::HamPath, &net()).unwrap();
        assert_eq!(exec.severity, OK);
        assert_eq!(exec.result["TooManyLeaves"], 3);
    }

    #[test]
    fn steiner_terminal_out_of_range_is_a_usage_error() {
        let exec = execute(&Verb::Steiner(vec![0, 99]), &net()).unwrap();
        assert_eq!(exec.severity, USAGE);
    }
}
