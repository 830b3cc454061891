use supercohom::koszul::DualSign;
use supercohom::realize::OspOptions;
use supercohom::tables::{verify, Status, TableRange};

#[test]
fn published_tables_have_no_unexplained_mismatch() {
    let rep = verify(&TableRange::default(), None, &OspOptions::default(), DualSign::Koszul).unwrap();
    assert!(!rep.has_mismatch());
    for row in &rep.rows {
        match row.status {
            Status::Match => assert!(row.points.iter().all(|p| p.status == Status::Match)),
            Status::PaperInternalConflict => assert!(row.known_conflict.is_some(), "{} conflicts without an explanation", row.id),
            Status::Mismatch => unreachable!(),
        }
        assert!(!row.points.is_empty(), "{} has no points", row.id);
    }
}

#[test]
fn headline_rows_match() {
    let rep = verify(&TableRange::default(), None, &OspOptions::default(), DualSign::Koszul).unwrap();
    for id in ["h1-gl-nn", "h1-gl-mn", "h1-q", "h1-d21a", "h1-g3", "h1-f4", "h2-gl22", "h2-gl33", "h2-gl-nn", "h2-d21a", "h2-g3", "h2-f4"] {
        assert_eq!(rep.row(id).unwrap().status, Status::Match, "{id}");
    }
}

#[test]
fn conflicts_carry_every_published_value_and_the_computed_one() {
    let rep = verify(&TableRange::default(), Some("h2-q"), &OspOptions::default(), DualSign::Koszul).unwrap();
    let row = rep.row("h2-q").unwrap();
    assert_eq!(row.status, Status::PaperInternalConflict);
    let bad = row.points.iter().find(|p| p.status == Status::PaperInternalConflict).unwrap();
    assert!(bad.paper.len() >= 2);
    assert!(bad.paper.iter().all(|s| !s.values.is_empty()));
    assert!(bad.computed.total > 0);
}

#[test]
fn row_filter_is_a_prefix() {
    let rep = verify(&TableRange::default(), Some("h1-"), &OspOptions::default(), DualSign::Koszul).unwrap();
    assert!(rep.rows.iter().all(|r| r.id.starts_with("h1-")));
    assert_eq!(rep.rows.len(), 8);
}
