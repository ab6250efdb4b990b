//! Exhaustive sweeps over monomials `E^a H^b t^d`. Every equation is linear in
//! `p`, so a monomial sweep covers all `p` in the swept degree range.

use rayon::prelude::*;

use super::*;
use crate::exactpoly::{format_rational, int, rat, Rational};
use crate::report::{params, CheckReport, Outcome, Witness};

/// `c` values the suite uses when none are given.
pub const DEFAULT_C_VALUES: [(i64, i64); 5] = [(0, 1), (1, 1), (2, 1), (1, 2), (-1, 1)];

/// `E^a H^b t^d` for `a, b, d <= depth`.
pub fn monomial_sweep(c: &Rational, depth: usize) -> Vec<OrePoly> {
    let mut out = Vec::new();
    for d in 0..=depth {
        for a in 0..=depth {
            for b in 0..=depth {
                out.push(OrePoly::monomial(OreElem::monomial(c, int(1), a, b), d));
            }
        }
    }
    out
}

/// Two-term polynomials `E^a H^b t^d + E^b H^a t^{d-1}`, so that forms
/// involving the two top coefficients see both.
fn mixed_sweep(c: &Rational, depth: usize) -> Vec<OrePoly> {
    let mut out = Vec::new();
    for d in 1..=depth {
        for a in 0..=depth {
            for b in 0..=depth {
                let top = OrePoly::monomial(OreElem::monomial(c, int(1), a, b), d);
                let next = OrePoly::monomial(OreElem::monomial(c, int(2), b, a), d - 1);
                out.push(&top + &next);
            }
        }
    }
    out
}

fn mismatch(p: &OrePoly, i: usize, j: usize, expected: &OreElem, actual: &OreElem) -> Option<Witness> {
    (expected != actual).then(|| Witness {
        i,
        j,
        expected: expected.to_string(),
        actual: format!("{actual} (p = {p})"),
    })
}

fn nonzero(p: &OrePoly, i: usize, j: usize, actual: &OreElem) -> Option<Witness> {
    mismatch(p, i, j, &OreElem::zero(actual.c()), actual)
}

/// Runs `body` on every polynomial; the first witness fails the report.
fn over(
    name: &str,
    c: &Rational,
    depth: usize,
    indices: &str,
    polys: Vec<OrePoly>,
    body: impl Fn(&OrePoly) -> Option<Witness>,
) -> CheckReport {
    let parameters = params([
        ("c", format_rational(c)),
        ("depth", depth.to_string()),
        ("n_max", (depth + 2).to_string()),
        ("witness", indices.to_string()),
    ]);
    CheckReport::timed(name, parameters, || Outcome::from_witness(polys.iter().find_map(body)))
}

type Job = Box<dyn Fn() -> CheckReport + Send + Sync>;

fn jobs_for_c(c: Rational, depth: usize) -> Vec<Job> {
    let n_max = depth + 2;
    let mut jobs: Vec<Job> = Vec::new();
    let cc = c.clone();
    jobs.push(Box::new(move || {
        over("ore_eq_original_system", &cc, depth, "i = n", monomial_sweep(&cc, depth), |p| {
            (1..=n_max).find_map(|n| mismatch(p, n, 0, &system_residual(p, n), &eq_residual(p, n, 0).unwrap()))
        })
    }));
    let cc = c.clone();
    jobs.push(Box::new(move || {
        over("ore_eq_trivial", &cc, depth, "i = n = k", monomial_sweep(&cc, depth), |p| {
            (0..=n_max).find_map(|n| nonzero(p, n, n, &eq_residual(p, n, n).unwrap()))
        })
    }));
    let cc = c.clone();
    jobs.push(Box::new(move || {
        over("ore_recursion", &cc, depth, "i = n, j = k", monomial_sweep(&cc, depth), |p| {
            (2..=n_max).find_map(|n| (1..n).find_map(|k| nonzero(p, n, k, &recursion_residual(p, n, k).unwrap())))
        })
    }));
    let cc = c.clone();
    jobs.push(Box::new(move || {
        over("ore_eq_infty", &cc, depth, "i = n", monomial_sweep(&cc, depth), |p| {
            (0..n_max).find_map(|n| mismatch(p, n, 0, &eq_residual(p, n + 1, n).unwrap(), &eq_infty_residual(p, n)))
        })
    }));
    if c == int(0) || c == int(1) {
        let cc = c.clone();
        jobs.push(Box::new(move || {
            let form = if cc == int(0) { corollary_c0_residual } else { corollary_c1_residual };
            over("ore_corollary", &cc, depth, "i = n", monomial_sweep(&cc, depth), |p| {
                (0..n_max).find_map(|n| mismatch(p, n, 0, &eq_infty_residual(p, n), &form(p, n).unwrap()))
            })
        }));
    }
    let cc = c.clone();
    jobs.push(Box::new(move || {
        over("ore_triangularity", &cc, depth, "i = n, j = perturbed index + 1", monomial_sweep(&cc, depth), |p| {
            (0..n_max).find_map(|n| triangularity(p, n))
        })
    }));
    let cc = c.clone();
    jobs.push(Box::new(move || {
        let mut polys = monomial_sweep(&cc, depth);
        polys.extend(mixed_sweep(&cc, depth));
        over("ore_remark_degree", &cc, depth, "i = n, j = k", polys, |p| remark(p, n_max))
    }));
    let cc = c.clone();
    jobs.push(Box::new(move || {
        let mut polys: Vec<OrePoly> =
            monomial_sweep(&cc, depth).into_iter().filter(|p| p.degree() <= Some(1)).collect();
        let et_h = OrePoly::from_coeffs(&cc, vec![OreElem::h(&cc), OreElem::e_pow(&cc, 1)]);
        polys.push(et_h);
        over("ore_degree_one", &cc, depth, "none", polys, |p| nonzero(p, 0, 0, &degree_one_combination(p).unwrap()))
    }));
    let cc = c.clone();
    jobs.push(Box::new(move || {
        over("ore_id1_id2", &cc, depth, "i = identity (1, 2), j = n", monomial_sweep(&cc, depth), |p| {
            let as_elem = |q: OrePoly| q.coeffs().iter().find(|m| !m.is_zero()).cloned();
            if let Some(r) = as_elem(id1_residual(p)) {
                return nonzero(p, 1, 0, &r);
            }
            (0..=n_max).find_map(|n| as_elem(id2_residual(p, n)).and_then(|r| nonzero(p, 2, n, &r)))
        })
    }));
    let cc = c.clone();
    jobs.push(Box::new(move || {
        let one = vec![OrePoly::constant(OreElem::one(&cc))];
        over("ore_id3", &cc, depth, "i = n, j = m", one, |p| {
            (0..=n_max).find_map(|n| (0..=n_max).find_map(|m| nonzero(p, n, m, &id3_residual(&cc, n, m))))
        })
    }));
    for basis in Basis::ALL {
        let cc = c.clone();
        jobs.push(Box::new(move || {
            let mut report = over("ore_rep_rows", &cc, depth, "i = n", monomial_sweep(&cc, depth), |p| {
                (1..=n_max).find_map(|n| nonzero(p, n, 0, &rep_row_residual(p, n, basis)))
            });
            report.parameters.insert("basis".into(), basis.to_string());
            report
        }));
        let cc = c.clone();
        jobs.push(Box::new(move || rep_factorization_check(depth.min(3), depth.min(3), basis, &cc)));
    }
    let cc = c.clone();
    jobs.push(Box::new(move || {
        let constants: Vec<OrePoly> = (0..=depth)
            .flat_map(|a| (0..=depth).map(move |b| (a, b)))
            .map(|(a, b)| OrePoly::constant(OreElem::monomial(&cc, int(1), a, b)))
            .collect();
        over("ore_constant_solutions", &cc, depth, "i = a, j = b", constants, |p| intro_constant(p, n_max))
    }));
    let cc = c;
    jobs.push(Box::new(move || {
        let kernel: Vec<OrePoly> = (0..=depth).map(|a| OrePoly::constant(OreElem::e_pow(&cc, a))).collect();
        let mut report = over("first_N_implies_all", &cc, depth, "i = n", kernel, |p| {
            let r = first_n_implies_all(p, 4);
            let status = format!("{:?} (p = {p})", r.status);
            let failed = !r.passed();
            r.witness.or_else(|| failed.then(|| Witness { i: 0, j: 0, expected: "Pass".into(), actual: status }))
        });
        report.parameters.insert("family".into(), "E^a".into());
        report
    }));
    jobs
}

/// Perturbs `p_j`, `j < n`, one index at a time and all together.
fn triangularity(p: &OrePoly, n: usize) -> Option<Witness> {
    let c = p.c();
    let base = eq_infty_residual(p, n);
    let bump = |j: usize| OrePoly::monomial(OreElem::monomial(c, int(j as i64 + 2), (j + 1) % 3, j % 3), j);
    let mut all = p.clone();
    for j in 0..n {
        let perturbed = p + &bump(j);
        if let Some(w) = mismatch(&perturbed, n, j + 1, &base, &eq_infty_residual(&perturbed, n)) {
            return Some(w);
        }
        all = &all + &bump(j);
    }
    mismatch(&all, n, n, &base, &eq_infty_residual(&all, n))
}

/// With `N = deg p`: `eq_{N+1}^N` and `eq_N^{N-1}` against their closed forms,
/// and `eq_{n+1}^n = 0` for `n > N`.
fn remark(p: &OrePoly, n_max: usize) -> Option<Witness> {
    let big_n = p.degree()?;
    let top = eq_residual(p, big_n + 1, big_n).unwrap();
    if let Some(w) = mismatch(p, big_n + 1, big_n, &remark_top_form(p).unwrap(), &top) {
        return Some(w);
    }
    if let Some(form) = remark_second_form(p) {
        if let Some(w) = mismatch(p, big_n, big_n - 1, &form, &eq_residual(p, big_n, big_n - 1).unwrap()) {
            return Some(w);
        }
    }
    (big_n + 1..n_max).find_map(|n| nonzero(p, n + 1, n, &eq_infty_residual(p, n)))
}

/// A constant `p_0 = E^a H^b` solves the first `n_max` equations iff
/// `ad_E(p_0) = 0`, which for `c != 0` means `b = 0`.
fn intro_constant(p: &OrePoly, n_max: usize) -> Option<Witness> {
    let p0 = p.coeff(0);
    let (a, q) = p0.terms().next().expect("nonzero constant");
    let b = q.degree().unwrap_or(0);
    let solves = (1..=n_max).all(|n| system_residual(p, n).is_zero());
    let commutes = p0.ad_e().is_zero();
    let predicted = p.c() == &int(0) || b == 0;
    (solves != commutes || commutes != predicted).then(|| Witness {
        i: a,
        j: b,
        expected: format!("solvable = {predicted}"),
        actual: format!("solvable = {solves}, commutes with E = {commutes}"),
    })
}

/// `first_N_implies_all` on `E^m f(t)` at `c = 2`, for `f` running over
/// `t^d` and a few mixed polynomials of degree at most `max_deg`.
fn c2_family(max_deg: usize, max_m: usize) -> Vec<CheckReport> {
    let c = int(2);
    let mut fs: Vec<Vec<Rational>> = (0..=max_deg)
        .map(|d| {
            let mut f = vec![int(0); d + 1];
            f[d] = int(1);
            f
        })
        .collect();
    fs.push(vec![int(0), int(-1), int(0), int(1)]);
    fs.push(vec![int(3), int(0), int(1)]);
    fs.push((0..=max_deg).map(|j| rat(j as i64 + 1, j as i64 + 2)).collect());
    let mut reports = Vec::new();
    for m in 0..=max_m {
        for f in &fs {
            let coeffs = f.iter().map(|x| OreElem::monomial(&c, x.clone(), m, 0)).collect();
            let mut r = first_n_implies_all(&OrePoly::from_coeffs(&c, coeffs), 4);
            r.parameters.insert("family".into(), "E^m f(t), c = 2".into());
            reports.push(r);
        }
    }
    reports
}

/// All Ore-algebra checks at the given depth, in canonical order: per `c`,
/// then the `c = 2` solution family.
pub fn suite(depth: usize, c_values: &[Rational]) -> Vec<CheckReport> {
    let jobs: Vec<Job> = c_values.iter().flat_map(|c| jobs_for_c(c.clone(), depth)).collect();
    let mut reports: Vec<CheckReport> = jobs.par_iter().map(|job| job()).collect();
    reports.extend(c2_family(4, 3));
    reports
}
