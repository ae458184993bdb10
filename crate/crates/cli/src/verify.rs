use cubic27::suites::{self, Suite, SUITES};
use serde_json::{json, Value};

use crate::report::Report;
use crate::{Failure, Opts};

/// Runs one suite, or every suite for `all`. Extended suites need
/// `--extended`.
pub fn run(id: &str, opts: &Opts, r: &mut Report) -> Result<(), Failure> {
    r.input("suite", id);
    let chosen: Vec<&Suite> = if id == "all" {
        SUITES.iter().filter(|s| opts.extended || !s.extended).collect()
    } else {
        let s = suites::find(id).ok_or_else(|| {
            let known: Vec<&str> = SUITES.iter().map(|s| s.id).collect();
            Failure::BadInput(format!("unknown suite {id:?}; known: all, {}", known.join(", ")))
        })?;
        if s.extended && !opts.extended {
            return Err(Failure::BadInput(format!("suite {id:?} needs --extended")));
        }
        vec![s]
    };
    let mut passed = true;
    let mut summaries = Vec::new();
    let mut rows = Vec::new();
    for s in chosen {
        let rep = s.run();
        passed &= rep.passed();
        let checks: Vec<Value> = rep
            .checks
            .iter()
            .map(|c| json!({ "name": c.name, "computed": c.computed, "expected": c.expected, "ok": c.ok }))
            .collect();
        for c in &rep.checks {
            rows.push(json!({
                "suite": s.id, "check": c.name, "computed": c.computed, "expected": c.expected, "ok": c.ok,
            }));
        }
        let mut summary = json!({
            "id": s.id,
            "summary": s.summary,
            "passed": rep.passed(),
            "within_limit": rep.within_limit(),
            "limit_s": rep.limit.as_secs(),
            "checks": checks,
        });
        if opts.timing {
            summary["elapsed_ms"] = json!(rep.elapsed.as_millis());
        }
        summaries.push(summary);
    }
    r.status = if passed { "pass" } else { "fail" }.into();
    match opts.out {
        crate::report::Format::Json => r.result("suites", summaries),
        crate::report::Format::Tsv => r.result("rows", rows),
    }
    if passed {
        Ok(())
    } else {
        Err(Failure::violation("verification failed"))
    }
}
