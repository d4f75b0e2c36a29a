//! Markdown rendering of scenario runs. The candidate table mirrors the
//! source layout (row/column orientation per scenario); cell values use
//! the same normalized element syntax as the JSON records.

use std::fmt::Write;

use super::report::{ReportBody, ScenarioReport, ScenarioRun};
use super::cell_index;

/// Renders just the `x^2` candidate grid.
pub fn render_table_markdown(report: &ScenarioReport) -> String {
    let index = cell_index(report);
    let layout = &report.layout;
    let mut out = String::new();

    let mut header = String::from("| |");
    let mut rule = String::from("|---|");
    for (_, col) in layout.cols.iter().map(|c| (&c.elem, &c.label)) {
        write!(header, " {col} |").unwrap();
        rule.push_str("---|");
    }
    out.push_str(&header);
    out.push('\n');
    out.push_str(&rule);
    out.push('\n');

    for row in &layout.rows {
        write!(out, "| {} |", row.label).unwrap();
        for col in &layout.cols {
            let key = match layout.row_axis {
                "z" => (col.elem, row.elem),
                _ => (row.elem, col.elem),
            };
            let text = match index.get(&key) {
                Some(Some(x2)) => x2.to_string(),
                _ => ".".to_string(),
            };
            write!(out, " {text} |").unwrap();
        }
        out.push('\n');
    }
    out
}

/// Renders a complete scenario section: candidates, table, survivors,
/// geodesic tests, conclusion, and the check lines.
pub fn render_run_markdown(run: &ScenarioRun) -> String {
    let mut out = String::new();
    writeln!(out, "## {}", run.name).unwrap();
    writeln!(out).unwrap();
    match &run.report {
        ReportBody::Pipeline(report) => render_pipeline(&mut out, report),
        ReportBody::Remark(report) => {
            writeln!(out, "- ring: {}", report.ring).unwrap();
            writeln!(
                out,
                "- generators: alpha = {}, beta = {}, gamma = {}",
                report.alpha_word, report.beta_word, report.gamma_word
            )
            .unwrap();
            writeln!(out, "- alpha -> {}", report.alpha).unwrap();
            writeln!(out, "- beta -> {}", report.beta).unwrap();
            writeln!(out, "- gamma -> {}", report.gamma).unwrap();
            writeln!(out, "- recovery word: {}", report.recovery_word).unwrap();
            writeln!(
                out,
                "- common trace: {} (loxodromic: {})",
                report.common_trace, report.loxodromic
            )
            .unwrap();
        }
        ReportBody::Failure { error } => {
            writeln!(out, "- aborted: {error}").unwrap();
        }
        ReportBody::Triangle(report) => {
            writeln!(out, "- q: {}", report.q).unwrap();
            writeln!(
                out,
                "- tr X = tr Y = {} (expected {}, deviation {:e})",
                report.trace, report.expected_trace, report.trace_deviation
            )
            .unwrap();
            writeln!(
                out,
                "- (YX)^{} = D up to sign, deviation {:e}",
                report.power_exponent, report.power_deviation
            )
            .unwrap();
            writeln!(
                out,
                "- C^2, D^q projectively trivial: deviations {:e}, {:e}",
                report.c_squared_deviation, report.d_power_deviation
            )
            .unwrap();
        }
    }
    writeln!(out).unwrap();
    writeln!(out, "### checks").unwrap();
    writeln!(out).unwrap();
    for check in &run.checks {
        let status = match check.status {
            super::CheckStatus::Pass => "PASS",
            super::CheckStatus::Fail => "FAIL",
        };
        writeln!(out, "- {status} `{}`: {}", check.id, check.detail).unwrap();
    }
    out
}

fn render_pipeline(out: &mut String, report: &ScenarioReport) {
    writeln!(out, "- ring: {}", report.ring).unwrap();
    writeln!(out, "- base defect 2 - tr[A,B]: {}", report.base_defect).unwrap();
    let zs: Vec<String> = report.z_candidates.iter().map(|e| e.to_string()).collect();
    writeln!(out, "- z candidates: {}", zs.join(", ")).unwrap();
    let ys: Vec<String> = report.y_candidates.iter().map(|e| e.to_string()).collect();
    writeln!(out, "- y candidates ({}): {}", ys.len(), ys.join(", ")).unwrap();
    writeln!(out).unwrap();
    writeln!(out, "### x^2 = z/y + y + 4").unwrap();
    writeln!(out).unwrap();
    out.push_str(&render_table_markdown(report));
    writeln!(out).unwrap();
    for sv in &report.square_survivors {
        let roots: Vec<String> = sv.roots.iter().map(|r| r.to_string()).collect();
        writeln!(out, "- square survivor {} with roots {}", sv.x2, roots.join(", ")).unwrap();
    }
    for g in &report.geodesic_eliminations {
        writeln!(
            out,
            "- root {} of {}: geodesic length {:.9} -> {}",
            g.root,
            g.x2,
            g.length,
            if g.eliminated { "eliminated" } else { "not eliminated" }
        )
        .unwrap();
    }
    let conclusion = match report.conclusion {
        super::Conclusion::ParabolicOnly => "parabolic-only",
        super::Conclusion::SurvivorsRemain => "survivors-remain",
    };
    writeln!(out, "- conclusion: {conclusion}").unwrap();
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geodesic::DEFAULT_ELIMINATION_TOL;
    use crate::scenarios::{run_by_name, run_scenario, figure8};

    #[test]
    fn figure8_table_keeps_source_orientation() {
        let run = run_scenario(&figure8(), DEFAULT_ELIMINATION_TOL).unwrap();
        let report = run.report.as_pipeline().unwrap();
        let md = render_table_markdown(report);
        let lines: Vec<&str> = md.lines().collect();
        // header + rule + 5 data rows
        assert_eq!(lines.len(), 7);
        assert!(lines[0].starts_with("| | m=0 | m=1 | m=2 | m=4 | m=5 |"));
        // (n=1, m=0) cell is 5 + w
        assert!(lines[2].starts_with("| n=1 | 5+1*w |"));
    }

    #[test]
    fn markdown_cells_match_json_records() {
        for name in ["figure8", "whitehead", "link622", "link623", "trefoil"] {
            let run = run_by_name(name, DEFAULT_ELIMINATION_TOL).unwrap();
            let report = run.report.as_pipeline().unwrap();
            let md = render_table_markdown(report);
            for cell in &report.table {
                if let Some(x2) = &cell.x2 {
                    assert!(
                        md.contains(&x2.to_string()),
                        "{name}: cell {x2} missing from markdown"
                    );
                }
            }
            // every rendered cell must come from a record
            for line in md.lines().skip(2) {
                for field in line.split('|').map(str::trim).skip(2) {
                    if field.is_empty() || field == "." {
                        continue;
                    }
                    assert!(
                        report.table.iter().any(|c| c
                            .x2
                            .map(|x| x.to_string() == field)
                            .unwrap_or(false)),
                        "{name}: rendered {field} not in records"
                    );
                }
            }
        }
    }

    #[test]
    fn remark_and_triangle_render() {
        let md = render_run_markdown(&run_by_name("remark", DEFAULT_ELIMINATION_TOL).unwrap());
        assert!(md.contains("PASS"));
        assert!(md.contains("common trace"));
        let md = render_run_markdown(&run_by_name("triangle:5", DEFAULT_ELIMINATION_TOL).unwrap());
        assert!(md.contains("(YX)^3"));
    }
}
