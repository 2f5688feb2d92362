//! Invariant suites at orders small enough to finish in seconds. Each suite
//! reports the first counterexample it finds.

use rayon::prelude::*;
use serde_json::json;

use primetree::criticality::unique_module_of_leaf_deletion;
use primetree::enumeration::{all_trees, labeled_class_count};
use primetree::families;
use primetree::minimality::is_minimal_for_bruteforce;
use primetree::primality::{is_prime_bruteforce, nontrivial_modules};
use primetree::{
    canonical_form, check_critical_conditions, check_minimal_conditions, extract_minimal_subtree, tree_is_prime,
    tree_sigma, verify_formula, CountKind, TreeCert, VertexSet,
};

use crate::output::Out;

type Outcome = Result<(), String>;
type Check = (&'static str, fn() -> Outcome);

fn subsets(n: usize) -> impl Iterator<Item = VertexSet> {
    (1u32..1 << n).map(move |m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
}

/// Runs `check` on every tree of each order and keeps the first failure.
fn over_trees(orders: std::ops::RangeInclusive<usize>, check: impl Fn(&TreeCert) -> Outcome + Sync) -> Outcome {
    for n in orders {
        let trees: Vec<TreeCert> = all_trees(n).map_err(|e| e.to_string())?.collect();
        let failure = trees.par_iter().find_map_first(|t| {
            check(t).err().map(|e| format!("tree {} : {e}", canonical_form(t).to_hex()))
        });
        if let Some(f) = failure {
            return Err(f);
        }
    }
    Ok(())
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn primality() -> Outcome {
    over_trees(1..=8, |t| {
        let brute = is_prime_bruteforce(t.graph()).map_err(|e| e.to_string())?;
        ensure(brute == tree_is_prime(t), || "criterion and module search disagree".into())
    })
}

fn class_counts() -> Outcome {
    for n in 1..=8 {
        let unlabeled = all_trees(n).map_err(|e| e.to_string())?.len();
        let labeled = labeled_class_count(n).map_err(|e| e.to_string())?;
        ensure(unlabeled == labeled, || format!("n={n}: {unlabeled} vs {labeled}"))?;
    }
    Ok(())
}

fn critical_conditions() -> Outcome {
    over_trees(5..=9, |t| {
        if !tree_is_prime(t) {
            return Ok(());
        }
        let s = tree_sigma(t).map_err(|e| e.to_string())?.sigma;
        for x in subsets(t.order()) {
            let passes = check_critical_conditions(t, &x).map_err(|e| e.to_string())?.overall;
            ensure(passes == (x == s), || format!("set {x} against sigma {s}"))?;
        }
        Ok(())
    })
}

fn minimal_conditions() -> Outcome {
    over_trees(5..=8, |t| {
        if !tree_is_prime(t) {
            return Ok(());
        }
        for x in subsets(t.order()) {
            let checker = check_minimal_conditions(t, &x).map_err(|e| e.to_string())?.overall;
            let brute = is_minimal_for_bruteforce(t, &x).map_err(|e| e.to_string())?;
            ensure(checker == brute, || format!("set {x}: conditions {checker}, definition {brute}"))?;
        }
        Ok(())
    })
}

fn leaf_deletion() -> Outcome {
    over_trees(5..=9, |t| {
        if !tree_is_prime(t) {
            return Ok(());
        }
        for x in t.leaves().iter() {
            let rest = t.graph().remove_vertices(&VertexSet::from([x])).map_err(|e| e.to_string())?;
            let mods = nontrivial_modules(&rest.graph).map_err(|e| e.to_string())?;
            let w = unique_module_of_leaf_deletion(t, x).map_err(|e| e.to_string())?;
            ensure(mods.len() == usize::from(w.is_some()), || format!("leaf {x}: {} modules", mods.len()))?;
        }
        Ok(())
    })
}

fn extraction() -> Outcome {
    over_trees(4..=7, |h| {
        if !tree_is_prime(h) {
            return Ok(());
        }
        for x in subsets(h.order()) {
            let sub = extract_minimal_subtree(h, &x).map_err(|e| e.to_string())?;
            let minimal = is_minimal_for_bruteforce(&sub.tree, &sub.local(&x)).map_err(|e| e.to_string())?;
            ensure(minimal, || format!("set {x}: output not minimal"))?;
        }
        Ok(())
    })
}

fn family_sigma() -> Outcome {
    let check = |f: families::Family, labels: &[String]| -> Outcome {
        let s = tree_sigma(&f.tree).map_err(|e| e.to_string())?;
        let want = f.spec.set_of(labels).ok_or("unknown label")?;
        ensure(s.sigma == want, || format!("{:?} {:?}: sigma {}", f.spec.kind, f.spec.params, s.sigma))
    };
    for m in 2..=5 {
        let f = families::spider_a(m).map_err(|e| e.to_string())?;
        let leaves: Vec<String> = f.tree.leaves().iter().map(|v| f.spec.label_of(v).to_string()).collect();
        check(f, &leaves)?;
    }
    for k in 5..=7 {
        for t in 1..=2 {
            check(families::p_kt(k, t).map_err(|e| e.to_string())?, &[(2 * t + 1).to_string(), (2 * t + k).to_string()])?;
        }
    }
    for m in 4..=6 {
        for (n1, n2) in [(1, 1), (1, 2), (2, 2)] {
            let s = 2 * (n1 + n2);
            let f = families::p_mn1n2(m, n1, n2).map_err(|e| e.to_string())?;
            check(f, &[(s + 1).to_string(), (s + m).to_string()])?;
        }
    }
    Ok(())
}

fn counts() -> Outcome {
    for kind in [CountKind::Critical2, CountKind::Minimal3] {
        let table = verify_formula(11, kind).map_err(|e| e.to_string())?;
        if let Some(r) = table.rows.iter().find(|r| !r.agree) {
            return Err(format!("{kind} n={}: formula {} enumerated {}", r.n, r.formula, r.enumerated));
        }
    }
    Ok(())
}

pub fn run(out: &mut Out) {
    let suites: [Check; 8] = [
        ("primality criterion", primality),
        ("tree class counts", class_counts),
        ("critical conditions", critical_conditions),
        ("minimal conditions", minimal_conditions),
        ("leaf deletion module", leaf_deletion),
        ("minimal extraction", extraction),
        ("family sigma", family_sigma),
        ("count formulas", counts),
    ];
    for (name, suite) in suites {
        let result = suite();
        out.verdict(name, result.is_ok());
        if let Err(witness) = result {
            out.emit(format!("  witness: {witness}"), json!({"record": "witness", "suite": name, "detail": witness}));
        }
    }
}
