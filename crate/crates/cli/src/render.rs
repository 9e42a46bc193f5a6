//! Markdown rendering of JSON reports. The manifest is embedded as a fenced
//! JSON block so a markdown report can be replayed too.

use std::fmt::Write;

use serde_json::Value;

pub const MANIFEST_HEADING: &str = "## Manifest";

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
    .replace('|', "\\|")
}

fn table(out: &mut String, headers: &[&str], rows: impl IntoIterator<Item = Vec<String>>) {
    let _ = writeln!(out, "| {} |", headers.join(" | "));
    let _ = writeln!(out, "|{}", " --- |".repeat(headers.len()));
    for row in rows {
        let _ = writeln!(out, "| {} |", row.join(" | "));
    }
    out.push('\n');
}

fn rows<'a>(v: &'a Value, key: &str) -> impl Iterator<Item = &'a Value> {
    v[key].as_array().into_iter().flatten()
}

pub fn markdown(report: &Value) -> String {
    let manifest = &report["manifest"];
    let command = manifest["command"].as_str().unwrap_or("report");
    let mut out = format!("# lscat {command}\n\n");
    if let Some(status) = report["status"].as_str() {
        let _ = writeln!(out, "Status: **{status}**\n");
    }
    match command {
        "compute" => {
            let _ = writeln!(out, "Subset: `{}`\n", cell(&report["subset"]));
            table(
                &mut out,
                &["invariant", "value", "witness", "status"],
                rows(report, "results").map(|r| {
                    let value = if r["status"] == "ok" {
                        cell(&r["value"])
                    } else {
                        cell(&r["error"]["message"])
                    };
                    vec![cell(&r["invariant"]), value, cell(&r["witness"]), cell(&r["status"])]
                }),
            );
            if !report["betti"].is_null() {
                let _ = writeln!(out, "Betti numbers over F2: `{}`\n", report["betti"]);
            }
        }
        "axioms" => {
            for r in rows(report, "reports") {
                let _ = writeln!(out, "## {} ({} points)\n", cell(&r["invariant"]), r["points"]);
                table(
                    &mut out,
                    &["axiom", "claimed", "status", "instances", "violations"],
                    rows(r, "results").map(|a| {
                        ["axiom", "claimed", "status", "instances", "violations"]
                            .iter()
                            .map(|k| cell(&a[*k]))
                            .collect()
                    }),
                );
            }
        }
        "relations" => table(
            &mut out,
            &["check", "invariant", "status", "violations"],
            rows(report, "reports").map(|r| {
                let inner = &r["result"];
                let body = inner.get("report").unwrap_or(inner);
                let violations = body.get("violations").cloned().unwrap_or(Value::Null);
                vec![
                    cell(&r["check"]),
                    cell(&inner["invariant"]),
                    cell(&r["status"]),
                    cell(&violations),
                ]
            }),
        ),
        "verify" => table(
            &mut out,
            &[
                "suite",
                "spaces",
                "checked",
                "skipped",
                "violations",
                "errors",
                "strict",
            ],
            rows(&report["report"], "suites").map(|s| {
                [
                    "suite",
                    "spaces",
                    "checked",
                    "skipped",
                    "violations",
                    "errors",
                    "strict",
                ]
                .iter()
                .map(|k| cell(&s[*k]))
                .collect()
            }),
        ),
        "demo" => table(
            &mut out,
            &["name", "kind", "expected"],
            rows(report, "builtins").map(|b| {
                let expected: Vec<String> = rows(b, "expected").map(|x| cell(&x["display"])).collect();
                vec![cell(&b["name"]), cell(&b["kind"]), expected.join("; ")]
            }),
        ),
        _ => {}
    }
    let _ = writeln!(
        out,
        "{MANIFEST_HEADING}\n\n```json\n{}\n```",
        serde_json::to_string_pretty(manifest).expect("serializable")
    );
    out
}

/// The manifest JSON inside a markdown report, if present.
pub fn manifest_block(text: &str) -> Option<&str> {
    let rest = &text[text.find(MANIFEST_HEADING)?..];
    let start = rest.find("```json\n")? + "```json\n".len();
    let end = rest[start..].find("```")?;
    Some(&rest[start..start + end])
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn manifest_survives_rendering() {
        let report = json!({ "manifest": { "command": "demo", "seed": 1 }, "builtins": [] });
        let md = markdown(&report);
        let block = manifest_block(&md).unwrap();
        assert_eq!(serde_json::from_str::<Value>(block).unwrap(), report["manifest"]);
    }
}
