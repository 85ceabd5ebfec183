use tiltc_core::hecke::KlEngine;
use tiltc_core::rootdata::linkage::LinkageDatum;
use tiltc_core::rootdata::Weight;
use tiltc_core::tilting::{
    cmin_simple_o, cmin_standard_o, Formulas, Kind, QuantumBlock, Query, Setting,
};
use tiltc_core::{CoxeterSystem, LaurentPoly};

fn p(s: &str) -> LaurentPoly {
    LaurentPoly::parse(s).unwrap()
}

#[test]
fn regular_o_standard_is_inverse_kl() {
    let sys = CoxeterSystem::from_type("A2").unwrap();
    let eng = KlEngine::new(sys.clone());
    let w0 = sys.longest().unwrap();
    for x in sys.elements_up_to(3).elements {
        for y in sys.elements_up_to(3).elements {
            let got = cmin_standard_o(&eng, &[], &[], &x, &y).unwrap();
            let want = eng.kl_poly(&sys.mul(&w0, &x), &sys.mul(&w0, &y));
            assert_eq!(got, want);
        }
    }
}

#[test]
fn simple_of_a1_reflection() {
    let sys = CoxeterSystem::from_type("A1").unwrap();
    let eng = KlEngine::new(sys.clone());
    let (e, s) = (sys.identity(), sys.generator(0));
    assert_eq!(
        cmin_simple_o(&eng, &[], &[], &s, &e).unwrap(),
        p("v^-1 + v")
    );
    assert_eq!(cmin_simple_o(&eng, &[], &[], &s, &s).unwrap(), p("1"));
    assert_eq!(cmin_simple_o(&eng, &[], &[], &e, &e).unwrap(), p("1"));
}

#[test]
fn tables_agree_sequential_and_parallel() {
    let sys = CoxeterSystem::from_type("affA2").unwrap();
    let eng = KlEngine::new(sys.clone());
    let q = Query::new(
        Formulas::new(&eng, &[], &[1]).unwrap(),
        Setting::KmNeg,
        Kind::Simple,
        6,
    );
    let reps = sys.regular_double_coset_reps(&[1], &[], 4).elements;
    let x = q.unrep(reps.last().unwrap());
    let a = tiltc_core::par::with_jobs(1, || q.table(&x).unwrap());
    let b = tiltc_core::par::with_jobs(4, || q.table(&x).unwrap());
    assert_eq!(a.to_json(), b.to_json());
}

#[test]
fn quantum_weights_are_echoed() {
    let d = LinkageDatum::from_str("A1", 5).unwrap();
    let eng = KlEngine::new(d.system().clone());
    let (block, x) = QuantumBlock::from_weight(&d, &Weight(vec![7])).unwrap();
    let t = block
        .query(&eng, Kind::Standard, 6)
        .unwrap()
        .table(&x)
        .unwrap();
    assert_eq!(t.x_weight, Some(Weight(vec![7])));
    assert!(t.entries.iter().all(|e| e.weight.is_some()));
    assert!(LinkageDatum::from_str("affA1", 5).is_err());
}
