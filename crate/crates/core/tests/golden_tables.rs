//! Cell-for-cell comparison of the regenerated candidate tables against
//! transcriptions of the source tables.

use knotgens::geodesic::DEFAULT_ELIMINATION_TOL;
use knotgens::scenarios::{render_table_markdown, run_by_name};

fn regenerated(name: &str) -> String {
    let run = run_by_name(name, DEFAULT_ELIMINATION_TOL).expect("scenario runs");
    render_table_markdown(run.report.as_pipeline().expect("pipeline report"))
}

#[test]
fn figure8_table_matches_transcription() {
    assert_eq!(regenerated("figure8"), include_str!("golden/figure8_table.md"));
}

#[test]
fn whitehead_table_matches_transcription() {
    assert_eq!(
        regenerated("whitehead"),
        include_str!("golden/whitehead_table.md")
    );
}

#[test]
fn link622_table_matches_transcription() {
    assert_eq!(
        regenerated("link622"),
        include_str!("golden/link622_table.md")
    );
}
