use rectify::recipes::{dispatch, run_recipe, DispatchOptions, Recipe};
use rectify::{verify_certificate, CertificateDocument, Embedding, Error};

fn family(n: u32, m: u32, l: u32) -> Embedding {
    Embedding::family(n, m, l).unwrap()
}

#[test]
fn dispatch_is_deterministic() {
    for (n, m, l) in [(2, 3, 4), (3, 4, 5), (5, 7, 9), (3, 10, 14), (4, 9, 10)] {
        let e = family(n, m, l);
        let a = CertificateDocument::from_certificate(&dispatch(&e, &DispatchOptions::default()).unwrap()).to_json();
        let b = CertificateDocument::from_certificate(&dispatch(&e, &DispatchOptions::default()).unwrap()).to_json();
        assert_eq!(a, b);
    }
}

#[test]
fn small_family_sweep_never_emits_bad_certificates() {
    let mut found = 0;
    for n in 2..=4 {
        for m in n + 1..=9 {
            for l in 2..=12 {
                match dispatch(&family(n, m, l), &DispatchOptions::default()) {
                    Ok(cert) => {
                        assert!(verify_certificate(&cert).is_ok(), "({n}, {m}, {l})");
                        found += 1;
                    }
                    Err(Error::NoRecipeApplies(attempts)) => assert!(!attempts.is_empty()),
                    Err(e) => panic!("({n}, {m}, {l}): {e}"),
                }
            }
        }
    }
    assert!(found > 0);
}

#[test]
fn pinned_recipes_agree_with_dispatch() {
    let e = family(3, 4, 5);
    assert_eq!(run_recipe(&e, Recipe::Craighero3).unwrap(), dispatch(&e, &DispatchOptions::default()).unwrap());
    let e = family(4, 13, 18);
    assert_eq!(run_recipe(&e, Recipe::Kuroda(Some((3, 1, 2, 2)))).unwrap().embedding, e);
    assert!(run_recipe(&e, Recipe::Kuroda(Some((3, 1, 1, 2)))).unwrap_err().is_inapplicable());
}

#[test]
fn tighter_search_bounds_lose_kuroda() {
    let e = family(3, 17, 28);
    let opts = DispatchOptions { max_l: 1, ..DispatchOptions::default() };
    assert!(dispatch(&e, &DispatchOptions::default()).is_ok());
    assert!(matches!(dispatch(&e, &opts), Err(Error::NoRecipeApplies(_))));
}
