//! Right principal bibundles and fractions: both round trips, and gauge
//! groupoids of biprincipal bibundles. Bibundles are enumerated by brute
//! force over labelled carriers, with principality decided here from the
//! raw tables.

use std::sync::{Arc, OnceLock};

use gpd_core::group::permutations;
use gpd_core::sample::{random_fraction, random_groupoid};
use gpd_core::*;

use crate::common::{classes, revalidate, rng};

const NONE: usize = usize::MAX;

/// Per-arrow action tables `t[a][p]`, `NONE` where `a` does not act on `p`.
type Tables = Vec<Vec<usize>>;

/// A left action moves the fibre over `src` to the fibre over `tgt`; a
/// right action the other way.
fn ends(g: &FiniteGroupoid, a: ArrowId, right: bool) -> (ObjectId, ObjectId) {
    if right {
        (g.tgt(a), g.src(a))
    } else {
        (g.src(a), g.tgt(a))
    }
}

fn consistent(g: &FiniteGroupoid, t: &Tables, assigned: &[bool], right: bool) -> bool {
    for a2 in g.arrows().filter(|&a| assigned[a]) {
        for a1 in g.arrows().filter(|&a| assigned[a]) {
            let Ok(c) = g.compose(a2, a1) else { continue };
            if !assigned[c] {
                continue;
            }
            for p in 0..t[c].len() {
                if t[c][p] == NONE {
                    continue;
                }
                // left: (a2∘a1)·p = a2·(a1·p); right: p·(a2∘a1) = (p·a2)·a1
                let via = if right { t[a1][t[a2][p]] } else { t[a2][t[a1][p]] };
                if via != t[c][p] {
                    return false;
                }
            }
        }
    }
    true
}

fn extend(g: &FiniteGroupoid, moment: &[ObjectId], right: bool, a: ArrowId, t: &mut Tables, assigned: &mut Vec<bool>, out: &mut Vec<Tables>) {
    if a == g.n_arrows() {
        out.push(t.clone());
        return;
    }
    let (from, to) = ends(g, a, right);
    let dom: Vec<usize> = (0..moment.len()).filter(|&p| moment[p] == from).collect();
    let cod: Vec<usize> = (0..moment.len()).filter(|&p| moment[p] == to).collect();
    if dom.len() != cod.len() {
        return;
    }
    let choices: Vec<Vec<usize>> = if g.is_unit(a) { vec![(0..dom.len()).collect()] } else { permutations(dom.len()) };
    for perm in choices {
        for (i, &p) in dom.iter().enumerate() {
            t[a][p] = cod[perm[i]];
        }
        assigned[a] = true;
        if consistent(g, t, assigned, right) {
            extend(g, moment, right, a + 1, t, assigned, out);
        }
        assigned[a] = false;
        for &p in &dom {
            t[a][p] = NONE;
        }
    }
}

/// Every action of `g` along `moment`.
fn actions(g: &FiniteGroupoid, moment: &[ObjectId], right: bool) -> Vec<Tables> {
    let mut out = Vec::new();
    let mut t = vec![vec![NONE; moment.len()]; g.n_arrows()];
    extend(g, moment, right, 0, &mut t, &mut vec![false; g.n_arrows()], &mut out);
    out
}

fn all_functions(n: usize, m: usize) -> Vec<Vec<usize>> {
    if n > 0 && m == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut f = vec![0; n];
    loop {
        out.push(f.clone());
        let Some(i) = f.iter().position(|&v| v + 1 < m) else { return out };
        f[i] += 1;
        f[..i].iter_mut().for_each(|v| *v = 0);
    }
}

/// Free, orbits equal to the fibres of `other`, and `other` onto.
fn principal(g: &FiniteGroupoid, t: &Tables, other: &[ObjectId], n_other: usize) -> bool {
    let n = other.len();
    let free = g.arrows().filter(|&a| !g.is_unit(a)).all(|a| (0..n).all(|p| t[a][p] != p));
    let mut orbit: Vec<usize> = (0..n).collect();
    // fixpoint of "smallest point reachable"
    let mut changed = true;
    while changed {
        changed = false;
        for a in g.arrows() {
            for p in 0..n {
                let q = t[a][p];
                if q != NONE && orbit[q] != orbit[p] {
                    let m = orbit[q].min(orbit[p]);
                    changed |= orbit[q] != m || orbit[p] != m;
                    orbit[q] = m;
                    orbit[p] = m;
                }
            }
        }
    }
    let same_classes = (0..n).all(|p| (0..n).all(|q| (orbit[p] == orbit[q]) == (other[p] == other[q])));
    let onto = (0..n_other).all(|x| other.contains(&x));
    free && same_classes && onto
}

fn triples(t: &Tables) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for (a, row) in t.iter().enumerate() {
        for (p, &q) in row.iter().enumerate() {
            if q != NONE {
                out.push([a, p, q]);
            }
        }
    }
    out
}

struct Found {
    bibundle: Bibundle,
    left_principal: bool,
}

struct Sweep {
    total: usize,
    right_principal: Vec<Found>,
}

fn enumerate(max_arrows: usize, max_carrier: usize) -> Result<Sweep, String> {
    let pool = classes(max_arrows);
    let mut sweep = Sweep { total: 0, right_principal: Vec::new() };
    for g in &pool {
        for h in &pool {
            for c in 0..=max_carrier {
                for rmom in all_functions(c, h.n_objects()) {
                    for rt in actions(h, &rmom, true) {
                        for lmom in all_functions(c, g.n_objects()) {
                            if !triples(&rt).iter().all(|&[_, p, q]| lmom[p] == lmom[q]) {
                                continue;
                            }
                            let rp = principal(h, &rt, &lmom, g.n_objects());
                            for lt in actions(g, &lmom, false) {
                                let lts = triples(&lt);
                                if !lts.iter().all(|&[_, p, q]| rmom[p] == rmom[q]) {
                                    continue;
                                }
                                let commute = lts.iter().all(|&[a, p, q]| {
                                    (0..h.n_arrows()).all(|k| rt[k][p] == NONE || rt[k][q] == lt[a][rt[k][p]])
                                });
                                if !commute {
                                    continue;
                                }
                                let la = tri!(GroupoidAction::new(g.clone(), Side::Left, lmom.clone(), &lts));
                                let ra = tri!(GroupoidAction::new(h.clone(), Side::Right, rmom.clone(), &triples(&rt)));
                                let b = tri!(Bibundle::new(la, ra));
                                sweep.total += 1;
                                ensure!(b.is_right_principal() == rp, "right principality disagrees on {b:?}");
                                let lp = principal(g, &lt, &rmom, h.n_objects());
                                ensure!(b.is_left_principal() == lp, "left principality disagrees on {b:?}");
                                if rp {
                                    sweep.right_principal.push(Found { bibundle: b, left_principal: lp });
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(sweep)
}

fn sweep() -> Result<&'static Sweep, String> {
    static SWEEP: OnceLock<Result<Sweep, String>> = OnceLock::new();
    SWEEP.get_or_init(|| enumerate(4, 4)).as_ref().map_err(Clone::clone)
}

/// `w` (from the carrier of `βα(b)` to that of `b`) is an isomorphism of
/// bibundles.
fn check_beta_alpha(b: &Bibundle) -> Result<(), String> {
    let w = tri!(roundtrip_beta_alpha(b));
    let alpha = tri!(bibundle_to_fraction(b));
    let bb = tri!(fraction_to_bibundle(&alpha.fraction)).bibundle;
    ensure!(w.len() == bb.carrier() && bb.carrier() == b.carrier(), "carriers differ in size");
    let mut hit = vec![false; b.carrier()];
    for &p in &w {
        ensure!(p < b.carrier() && !hit[p], "witness is not a bijection");
        hit[p] = true;
    }
    for q in 0..bb.carrier() {
        ensure!(b.lmom()[w[q]] == bb.lmom()[q] && b.rmom()[w[q]] == bb.rmom()[q], "witness moves a moment");
        for g in b.left_groupoid().arrows() {
            if let Some(q2) = bb.left_action().try_act(g, q) {
                ensure!(b.left_action().try_act(g, w[q]) == Some(w[q2]), "witness breaks the left action");
            }
        }
        for k in b.right_groupoid().arrows() {
            if let Some(q2) = bb.right_action().try_act(k, q) {
                ensure!(b.right_action().try_act(k, w[q]) == Some(w[q2]), "witness breaks the right action");
            }
        }
    }
    Ok(())
}

pub fn round_trips() -> Result<String, String> {
    let s = sweep()?;
    for f in &s.right_principal {
        check_beta_alpha(&f.bibundle)?;
    }
    let mut r = rng(7);
    let mut done = 0;
    while done < 200 {
        let g = Arc::new(random_groupoid(&mut r, 8));
        let t = Arc::new(random_groupoid(&mut r, 8));
        let Some(fr) = random_fraction(&mut r, &g, &t) else { continue };
        let w = tri!(roundtrip_alpha_beta(&fr));
        ensure!(tri!(fraction_equal(&w.fraction, &fr)), "α∘β differs from the fraction");
        done += 1;
    }
    Ok(format!(
        "{} right principal of {} bibundles with carrier ≤ 4, 200 random fractions",
        s.right_principal.len(),
        s.total
    ))
}

fn is_permutation(v: &[usize], n: usize) -> bool {
    let mut hit = vec![false; n];
    v.len() == n && v.iter().all(|&x| x < n && !std::mem::replace(&mut hit[x], true))
}

pub fn gauge() -> Result<String, String> {
    let s = sweep()?;
    let mut count = 0;
    for f in s.right_principal.iter().filter(|f| f.left_principal) {
        let b = &f.bibundle;
        let gi = tri!(gauge_from_bibundle(b));
        revalidate(&gi.gauge.groupoid)?;
        tri!(gi.iso.check());
        ensure!(*gi.iso.domain() == gi.gauge.groupoid && **gi.iso.codomain() == **b.right_groupoid(), "isomorphism has the wrong endpoints");
        let (d, c) = (gi.iso.domain(), gi.iso.codomain());
        ensure!(
            d.n_objects() == c.n_objects() && is_permutation(gi.iso.on_objects(), c.n_objects()),
            "not bijective on objects"
        );
        ensure!(
            d.n_arrows() == c.n_arrows() && is_permutation(gi.iso.on_arrows(), c.n_arrows()),
            "not bijective on arrows"
        );
        count += 1;
    }
    Ok(format!("{count} biprincipal bibundles"))
}
