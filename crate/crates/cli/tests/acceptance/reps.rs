//! Representations: the validator against an integer functoriality check
//! on every matrix assignment with entries in {-1, 0, 1}, and pullback
//! along weak equivalences.

use std::sync::Arc;

use gpd_core::sample::random_weak_equivalence;
use gpd_core::*;

use crate::common::rng;

/// Row-major integer matrix with its shape.
#[derive(Clone)]
struct IntMat {
    rows: usize,
    cols: usize,
    e: Vec<i32>,
}

impl IntMat {
    fn mul(&self, other: &IntMat) -> IntMat {
        let mut e = vec![0; self.rows * other.cols];
        for i in 0..self.rows {
            for j in 0..other.cols {
                e[i * other.cols + j] = (0..self.cols).map(|k| self.e[i * self.cols + k] * other.e[k * other.cols + j]).sum();
            }
        }
        IntMat { rows: self.rows, cols: other.cols, e }
    }

    fn is_identity(&self) -> bool {
        self.rows == self.cols && (0..self.rows).all(|i| (0..self.cols).all(|j| self.e[i * self.cols + j] == i32::from(i == j)))
    }
}

/// Every `rows × cols` matrix with entries in {-1, 0, 1}.
fn candidates(rows: usize, cols: usize) -> Vec<(IntMat, Matrix)> {
    let n = rows * cols;
    (0..3usize.pow(n as u32))
        .map(|mut code| {
            let e: Vec<i32> = (0..n)
                .map(|_| {
                    let d = (code % 3) as i32 - 1;
                    code /= 3;
                    d
                })
                .collect();
            let strings: Vec<Vec<String>> = (0..rows).map(|i| (0..cols).map(|j| e[i * cols + j].to_string()).collect()).collect();
            let m = Matrix::from_strings(&strings, cols).expect("integer entries");
            (IntMat { rows, cols, e }, m)
        })
        .collect()
}

fn functorial(g: &FiniteGroupoid, composable: &[(ArrowId, ArrowId, ArrowId)], mats: &[&IntMat]) -> bool {
    g.objects().all(|x| mats[g.unit(x)].is_identity())
        && composable.iter().all(|&(a2, a1, c)| mats[a2].mul(mats[a1]).e == mats[c].e)
}

/// Runs every assignment for one dimension vector; returns the accepted
/// representations and the number of assignments seen.
fn sweep(g: &Arc<FiniteGroupoid>, dims: &[usize]) -> Result<(Vec<Representation>, usize), String> {
    let cands: Vec<Vec<(IntMat, Matrix)>> = g.arrows().map(|a| candidates(dims[g.tgt(a)], dims[g.src(a)])).collect();
    let composable: Vec<(ArrowId, ArrowId, ArrowId)> = g
        .arrows()
        .flat_map(|a1| g.arrows_from(g.tgt(a1)).iter().map(move |&a2| (a2, a1)))
        .map(|(a2, a1)| (a2, a1, g.compose(a2, a1).expect("composable")))
        .collect();
    let mut idx = vec![0usize; g.n_arrows()];
    let mut mats: Vec<Matrix> = cands.iter().map(|c| c[0].1.clone()).collect();
    let (mut accepted, mut seen) = (Vec::new(), 0usize);
    loop {
        let verdict = check_rep_tables(g, dims, &mats).is_ok();
        let ints: Vec<&IntMat> = idx.iter().zip(&cands).map(|(&i, c)| &c[i].0).collect();
        let expected = functorial(g, &composable, &ints);
        ensure!(verdict == expected, "validator says {verdict} on dims {dims:?}, assignment {idx:?}");
        if verdict {
            accepted.push(tri!(validate_rep(g.clone(), dims.to_vec(), mats.clone())));
        }
        seen += 1;
        let Some(a) = (0..idx.len()).find(|&a| idx[a] + 1 < cands[a].len()) else { break };
        idx[a] += 1;
        mats[a] = cands[a][idx[a]].1.clone();
        for b in 0..a {
            idx[b] = 0;
            mats[b] = cands[b][0].1.clone();
        }
    }
    Ok((accepted, seen))
}

fn dim_vectors(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out.into_iter().flat_map(|v| (0..=2).map(move |d| [v.clone(), vec![d]].concat())).collect();
    }
    out
}

/// Pullback along `w` preserves and reflects isomorphism of `a` and `b`.
fn check_pullback(w: &GroupoidMap, a: &Representation, b: &Representation) -> Result<bool, String> {
    let below = tri!(find_rep_isomorphism(a, b));
    let (pa, pb) = (tri!(pullback_rep(a, w)), tri!(pullback_rep(b, w)));
    if let Some(t) = &below {
        ensure!(tri!(is_rep_isomorphism(t, a, b)), "found intertwiner is not an isomorphism");
        let pulled: Vec<Matrix> = w.domain().objects().map(|x| t[w.object(x)].clone()).collect();
        ensure!(tri!(is_rep_isomorphism(&pulled, &pa, &pb)), "pullback does not preserve an isomorphism");
    }
    let above = tri!(find_rep_isomorphism(&pa, &pb));
    if let Some(t) = &above {
        ensure!(tri!(is_rep_isomorphism(t, &pa, &pb)), "found intertwiner upstairs is not an isomorphism");
    }
    ensure!(below.is_some() == above.is_some(), "pullback changes the verdict ({} below, {} above)", below.is_some(), above.is_some());
    Ok(below.is_some())
}

pub fn criterion() -> Result<String, String> {
    let fixtures = [
        ("Z/2", Arc::new(group_groupoid(&Group::cyclic(2)))),
        ("Z/3", Arc::new(group_groupoid(&Group::cyclic(3)))),
        ("pair(2)", Arc::new(pair_groupoid(2))),
    ];
    let mut r = rng(10);
    let mut report = Vec::new();
    let (mut pairs, mut isomorphic) = (0, 0);
    for (name, g) in &fixtures {
        let (mut reps, mut seen) = (Vec::new(), 0);
        for dims in dim_vectors(g.n_objects()) {
            let (acc, n) = sweep(g, &dims)?;
            reps.extend(acc);
            seen += n;
        }
        report.push(format!("{name}: {} of {seen} accepted", reps.len()));
        for _ in 0..3 {
            let w = random_weak_equivalence(&mut r, g);
            for a in &reps {
                for b in reps.iter().filter(|b| b.dims() == a.dims()) {
                    isomorphic += usize::from(check_pullback(&w, a, b)?);
                    pairs += 1;
                }
            }
        }
    }
    Ok(format!("{}; pullback checked on {pairs} pairs ({isomorphic} isomorphic)", report.join(", ")))
}
