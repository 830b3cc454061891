use supercohom::cache::ResultCache;
use supercohom::cohomology::{cohomology, cohomology_upto};
use supercohom::koszul::{trivial_module, DualSign};
use supercohom::realize::*;
use supercohom::spectral::*;

fn setup(f: Family, m: usize, n: usize) -> (NilpotentAlgebra, IdealDesignation) {
    let (alg, ideal) = build(f, m, n, &OspOptions::default()).unwrap();
    (alg, ideal.unwrap())
}

#[test]
fn gl33_second_page_splits_as_eight_twelve_eight() {
    let (alg, ideal) = setup(Family::Gl, 3, 3);
    let page = e2_page(&alg, &ideal, 2, DualSign::Koszul, false).unwrap();
    assert_eq!((page.total(0, 2), page.total(1, 1), page.total(2, 0)), (8, 12, 8));
    assert!(!page.fallback);
}

#[test]
fn q3_mixed_term_is_two() {
    let (alg, ideal) = setup(Family::Q, 0, 3);
    let page = e2_page(&alg, &ideal, 2, DualSign::Koszul, false).unwrap();
    assert_eq!(page.total(1, 1), 2);
}

#[test]
fn collapse_holds_in_small_cases() {
    for (f, m, n) in [(Family::Gl, 2, 1), (Family::Gl, 2, 2), (Family::Q, 0, 3), (Family::OspOdd, 2, 1), (Family::OspEven, 2, 1)] {
        let (alg, ideal) = setup(f, m, n);
        let rep = collapse_check(&alg, &ideal, 3, DualSign::Koszul, false).unwrap();
        assert!(rep.holds(), "{}: {:?}", f.display(m, n), rep.rows);
        assert_eq!(rep.rows.len(), 4);
    }
}

#[test]
fn collapse_rows_serialize() {
    let (alg, ideal) = setup(Family::Gl, 2, 2);
    let rep = collapse_check(&alg, &ideal, 2, DualSign::Koszul, false).unwrap();
    let back: CollapseReport = serde_json::from_str(&serde_json::to_string(&rep).unwrap()).unwrap();
    assert_eq!(back, rep);
}

#[test]
fn recursion_reproduces_direct_h2() {
    for (f, m, n) in [(Family::Gl, 3, 3), (Family::Gl, 3, 2), (Family::Q, 0, 4), (Family::OspOdd, 2, 2), (Family::OspEven, 2, 1)] {
        let (alg, _) = setup(f, m, n);
        let direct = cohomology(&alg, &trivial_module(&alg), 2).unwrap();
        let rec = h2_recursive(f, m, n, DualSign::Koszul, None).unwrap();
        assert!(rec.result.same_dims(&direct), "{}", f.display(m, n));
        assert_eq!(rec.steps.len() + 1, recursion_chain(f, m, n).len());
    }
}

#[test]
fn recursion_steps_for_gl33() {
    let rec = h2_recursive(Family::Gl, 3, 3, DualSign::Koszul, None).unwrap();
    assert_eq!(rec.steps[0].h0_h2_ideal, 8);
    assert_eq!(rec.steps[0].h1_h1_ideal, 12);
    assert_eq!(rec.steps[0].smaller, (2, 2));
    assert_eq!(rec.base, (1, 1, 0));
    assert_eq!(rec.result.total, 28);
}

#[test]
fn cache_round_trips_and_is_used() {
    let dir = tempfile::tempdir().unwrap();
    let cache = ResultCache::new(dir.path());
    let (alg, _) = setup(Family::Gl, 2, 2);
    let h = cohomology_upto(&alg, &trivial_module(&alg), 2, false).unwrap().remove(2);
    assert!(cache.load("gl-2-2-h2", alg.symbols()).is_none());
    cache.store("gl-2-2-h2", alg.symbols(), &h);
    assert_eq!(cache.load("gl-2-2-h2", alg.symbols()).unwrap(), h);
    // a different symbol system never reads it back
    let (other, _) = setup(Family::Gl, 3, 2);
    assert!(cache.load("gl-2-2-h2", other.symbols()).is_none());

    let cold = h2_recursive(Family::Gl, 3, 3, DualSign::Koszul, Some(&cache)).unwrap();
    let warm = h2_recursive(Family::Gl, 3, 3, DualSign::Koszul, Some(&cache)).unwrap();
    assert_eq!(cold.result, warm.result);
    assert!(std::fs::read_dir(dir.path()).unwrap().count() >= 2);
}
