//! The `verify` subcommand: property checks and scalar-theorem witnesses,
//! one report line per check.

use toral_core::{
    candidate_primes, canonicalize_omega, eigen_profile, enumerate_balanced, omega_group, phi,
    verify_scalar_theorem, CentralizerType, ExceptionalType, ExtendedDiagram, KacTuple, RootSystem,
    SearchMode,
};

struct Reporter {
    failures: usize,
}

impl Reporter {
    fn check(&mut self, label: &str, ok: bool, detail: String) {
        if ok {
            println!("ok   {label}: {detail}");
        } else {
            self.failures += 1;
            println!("FAIL {label}: {detail}");
        }
    }
}

/// Run the suite for `ty`, optionally restricted to one prime. Returns
/// `Ok(true)` when every check passed; `Err` only on internal failures.
pub fn run(ty: ExceptionalType, prime: Option<i64>) -> Result<bool, String> {
    let rs = RootSystem::build(ty);
    let mut r = Reporter { failures: 0 };

    // injectivity of the subgraph-to-root map
    {
        let diagram = ExtendedDiagram::new(&rs);
        let subs = diagram.connected_subgraphs();
        let mut images = std::collections::HashSet::new();
        let mut ok = true;
        for j in &subs {
            let root = phi(&rs, j).map_err(|e| e.to_string())?;
            if !images.insert(root.coeffs().to_vec()) {
                ok = false;
            }
        }
        r.check(
            "phi-injective",
            ok,
            format!(
                "{} connected subgraphs map to distinct positive roots",
                subs.len()
            ),
        );
    }

    let primes: Vec<i64> = match prime {
        Some(p) => vec![p],
        None => candidate_primes(ty),
    };
    let omega = omega_group(&rs);

    for &p in &primes {
        let records = enumerate_balanced(&rs, p, auto_mode(ty, p)).map_err(|e| e.to_string())?;

        // per-record identities
        let mut identities_ok = true;
        let mut omega_ok = true;
        for rec in &records {
            let prof = eigen_profile(&rs, &rec.kac);
            let v = prof.counts();
            let sum: i64 = v.iter().map(|&x| x as i64).sum();
            if sum != rs.num_roots() {
                identities_ok = false;
            }
            for j in 1..p as usize {
                if v[j] != v[p as usize - j] {
                    identities_ok = false;
                }
            }
            if prof.balanced_d() != Some(rec.d) {
                identities_ok = false;
            }
            if (p - 1) * rec.d as i64 != rs.num_roots() - v[0] as i64 {
                identities_ok = false;
            }
            if p > 3 && prof.killing_norm() != 0 {
                identities_ok = false;
            }
            for g in &omega {
                let relabeled =
                    KacTuple::new(&rs, p, g.apply_labels(rec.kac.coords())).expect("valid");
                if eigen_profile(&rs, &relabeled) != prof {
                    omega_ok = false;
                }
                let (_, ct) = toral_core::centralizer(&rs, &relabeled);
                if ct != rec.centralizer {
                    omega_ok = false;
                }
                if canonicalize_omega(&rs, &relabeled) != rec.kac {
                    omega_ok = false;
                }
            }
        }
        r.check(
            &format!("identities p={p}"),
            identities_ok,
            format!(
                "{} classes: profile symmetry, orbit dimension, trace form",
                records.len()
            ),
        );
        r.check(
            &format!("omega-invariance p={p}"),
            omega_ok,
            "profiles and centralizer types invariant under relabeling".to_string(),
        );

        // engine agreement on small instances
        if p <= 13 {
            let exhaustive =
                enumerate_balanced(&rs, p, SearchMode::Exhaustive).map_err(|e| e.to_string())?;
            let pruned =
                enumerate_balanced(&rs, p, SearchMode::Pruned).map_err(|e| e.to_string())?;
            let mut agree = exhaustive == pruned;
            if ty.is_good_prime(p).map_err(|e| e.to_string())? {
                let levi =
                    enumerate_balanced(&rs, p, SearchMode::Levi).map_err(|e| e.to_string())?;
                agree = agree && levi == exhaustive;
            }
            r.check(
                &format!("mode-agreement p={p}"),
                agree,
                "exhaustive, levi (good p) and pruned engines coincide".to_string(),
            );
        }

        // scalar-multiple linkage of same-centralizer classes
        let report = verify_scalar_theorem(&rs, p).map_err(|e| e.to_string())?;
        let multi: Vec<String> = report
            .groups
            .iter()
            .filter(|g| g.classes.len() > 1)
            .map(|g| describe_group(&g.centralizer, g.classes.len()))
            .collect();
        let detail = if multi.is_empty() {
            "no repeated centralizer types".to_string()
        } else {
            format!("witnesses found for {}", multi.join(", "))
        };
        r.check(
            &format!("scalar-theorem p={p}"),
            report.all_linked(),
            detail,
        );
    }

    Ok(r.failures == 0)
}

fn auto_mode(ty: ExceptionalType, p: i64) -> SearchMode {
    if toral_core::is_heavy_case(ty, p) {
        SearchMode::Pruned
    } else {
        SearchMode::Exhaustive
    }
}

fn describe_group(ct: &CentralizerType, n: usize) -> String {
    format!("{n} classes with centralizer {ct}")
}
