//! Linear representations of finite groupoids over the rationals.
//!
//! A representation assigns a vector space `Q^dim(x)` to every object and
//! an invertible matrix of shape `dim(tgt g) × dim(src g)` to every arrow,
//! functorially. All arithmetic is exact.

mod matrix;

use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand::rngs::StdRng;

pub use matrix::{format_rational, parse_rational, Matrix};

use crate::error::{Error, Result};
use crate::groupoid::{isotropy, orbits, FiniteGroupoid};
use crate::morphism::{same_groupoid, GroupoidMap};
use crate::{ArrowId, ObjectId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    groupoid: Arc<FiniteGroupoid>,
    dims: Vec<usize>,
    mats: Vec<Matrix>,
}

/// Checks shapes and functoriality over the whole composition table.
pub fn validate_rep(groupoid: Arc<FiniteGroupoid>, dims: Vec<usize>, mats: Vec<Matrix>) -> Result<Representation> {
    check_rep_tables(&groupoid, &dims, &mats)?;
    Ok(Representation { groupoid, dims, mats })
}

/// The checks of [`validate_rep`] on borrowed tables.
pub fn check_rep_tables(g: &FiniteGroupoid, dims: &[usize], mats: &[Matrix]) -> Result<()> {
    if dims.len() != g.n_objects() {
        return Err(Error::Shape(format!("{} dims for {} objects", dims.len(), g.n_objects())));
    }
    if mats.len() != g.n_arrows() {
        return Err(Error::Shape(format!("{} matrices for {} arrows", mats.len(), g.n_arrows())));
    }
    for a in g.arrows() {
        let (r, c) = (dims[g.tgt(a)], dims[g.src(a)]);
        if (mats[a].rows(), mats[a].cols()) != (r, c) {
            return Err(Error::RepLaw {
                arrows: vec![a],
                reason: format!(
                    "matrix is {}x{}, expected {r}x{c}",
                    mats[a].rows(),
                    mats[a].cols()
                ),
            });
        }
    }
    for x in g.objects() {
        let u = g.unit(x);
        if mats[u] != Matrix::identity(dims[x]) {
            return Err(Error::RepLaw {
                arrows: vec![u],
                reason: "unit is not sent to the identity".into(),
            });
        }
    }
    for x in g.objects() {
        for &g1 in g.arrows_from(x) {
            for &g2 in g.arrows_from(g.tgt(g1)) {
                let lhs = &mats[g.mul(g2, g1)];
                if *lhs != mats[g2].mul(&mats[g1])? {
                    return Err(Error::RepLaw {
                        arrows: vec![g2, g1],
                        reason: "matrix of the composite is not the product".into(),
                    });
                }
            }
        }
    }
    // Invertibility follows: mat(g⁻¹)·mat(g) = mat(unit) = I.
    Ok(())
}

impl Representation {
    pub fn groupoid(&self) -> &Arc<FiniteGroupoid> {
        &self.groupoid
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn mats(&self) -> &[Matrix] {
        &self.mats
    }

    pub fn dim(&self, x: ObjectId) -> usize {
        self.dims[x]
    }

    pub fn mat(&self, g: ArrowId) -> &Matrix {
        &self.mats[g]
    }

    pub fn check(&self) -> Result<()> {
        check_rep_tables(&self.groupoid, &self.dims, &self.mats)
    }
}

/// Every object gets `Q`, every arrow the identity.
pub fn trivial_rep(g: &Arc<FiniteGroupoid>) -> Representation {
    Representation {
        groupoid: g.clone(),
        dims: vec![1; g.n_objects()],
        mats: vec![Matrix::identity(1); g.n_arrows()],
    }
}

pub fn zero_rep(g: &Arc<FiniteGroupoid>) -> Representation {
    Representation {
        groupoid: g.clone(),
        dims: vec![0; g.n_objects()],
        mats: vec![Matrix::identity(0); g.n_arrows()],
    }
}

/// `f*r`: dimensions and matrices read through `f`.
pub fn pullback_rep(r: &Representation, f: &GroupoidMap) -> Result<Representation> {
    if !same_groupoid(f.codomain(), &r.groupoid) {
        return Err(Error::EndpointMismatch(
            "map codomain is not the groupoid of the representation".into(),
        ));
    }
    let g = f.domain();
    let out = Representation {
        groupoid: g.clone(),
        dims: g.objects().map(|x| r.dims[f.object(x)]).collect(),
        mats: g.arrows().map(|a| r.mats[f.arrow(a)].clone()).collect(),
    };
    debug_assert!(out.check().is_ok());
    Ok(out)
}

pub fn direct_sum(r1: &Representation, r2: &Representation) -> Result<Representation> {
    if !same_groupoid(&r1.groupoid, &r2.groupoid) {
        return Err(Error::EndpointMismatch("representations of different groupoids".into()));
    }
    Ok(Representation {
        groupoid: r1.groupoid.clone(),
        dims: r1.dims.iter().zip(&r2.dims).map(|(a, b)| a + b).collect(),
        mats: r1
            .mats
            .iter()
            .zip(&r2.mats)
            .map(|(a, b)| Matrix::block_diagonal(a, b))
            .collect(),
    })
}

fn check_intertwiner_shapes(t: &[Matrix], r1: &Representation, r2: &Representation) -> Result<()> {
    if !same_groupoid(&r1.groupoid, &r2.groupoid) {
        return Err(Error::EndpointMismatch("representations of different groupoids".into()));
    }
    if t.len() != r1.groupoid.n_objects() {
        return Err(Error::Shape(format!(
            "{} intertwiner components for {} objects",
            t.len(),
            r1.groupoid.n_objects()
        )));
    }
    for (x, m) in t.iter().enumerate() {
        if (m.rows(), m.cols()) != (r2.dims[x], r1.dims[x]) {
            return Err(Error::Shape(format!(
                "component at object {x} is {}x{}, expected {}x{}",
                m.rows(),
                m.cols(),
                r2.dims[x],
                r1.dims[x]
            )));
        }
    }
    Ok(())
}

/// `T(tgt g)·mat1(g) = mat2(g)·T(src g)` for every arrow.
pub fn is_intertwiner(t: &[Matrix], r1: &Representation, r2: &Representation) -> Result<bool> {
    check_intertwiner_shapes(t, r1, r2)?;
    let g = &r1.groupoid;
    for a in g.arrows() {
        if t[g.tgt(a)].mul(&r1.mats[a])? != r2.mats[a].mul(&t[g.src(a)])? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// An intertwiner with every component invertible.
pub fn is_rep_isomorphism(t: &[Matrix], r1: &Representation, r2: &Representation) -> Result<bool> {
    check_intertwiner_shapes(t, r1, r2)?;
    Ok(t.iter().all(Matrix::is_invertible) && is_intertwiner(t, r1, r2)?)
}

/// A basis of the `dim2(x) × dim1(x)` matrices commuting with the isotropy
/// at `x`: `T·mat1(h) = mat2(h)·T` for every loop `h` at `x`.
pub fn intertwiner_basis(r1: &Representation, r2: &Representation, x: ObjectId) -> Result<Vec<Matrix>> {
    if !same_groupoid(&r1.groupoid, &r2.groupoid) {
        return Err(Error::EndpointMismatch("representations of different groupoids".into()));
    }
    let iso = isotropy(&r1.groupoid, x)?;
    let (m, n) = (r2.dims[x], r1.dims[x]);
    // unknown T[i][j] sits at column i*n + j
    let mut rows = Vec::new();
    for &h in &iso.arrows {
        let (a, b) = (&r1.mats[h], &r2.mats[h]);
        for i in 0..m {
            for j in 0..n {
                // (T·a)[i][j] - (b·T)[i][j]
                let mut row = vec![BigRational::zero(); m * n];
                for k in 0..n {
                    row[i * n + k] += &a[(k, j)];
                }
                for k in 0..m {
                    row[k * n + j] -= &b[(i, k)];
                }
                rows.push(row);
            }
        }
    }
    if m * n == 0 {
        return Ok(vec![]);
    }
    let system = Matrix::from_rows(rows, m * n)?;
    Ok(system
        .nullspace()
        .into_iter()
        .map(|v| {
            let rows = v.chunks(n).map(<[_]>::to_vec).collect();
            Matrix::from_rows(rows, n).expect("chunked rows")
        })
        .collect())
}

/// Finds an isomorphism `r1 → r2` if one exists.
///
/// Works one orbit at a time. At the orbit representative the isotropy
/// representations are compared by the dimensions of their intertwiner
/// spaces: over the rationals, `V ≅ W` iff
/// `dim Hom(V,V) = dim Hom(V,W) = dim Hom(W,W)`, since the isotropy is a
/// finite group and its representations are semisimple. When they agree an
/// invertible intertwiner is searched for among combinations of the basis
/// and then transported along the orbit.
pub fn find_rep_isomorphism(r1: &Representation, r2: &Representation) -> Result<Option<Vec<Matrix>>> {
    if !same_groupoid(&r1.groupoid, &r2.groupoid) {
        return Err(Error::EndpointMismatch("representations of different groupoids".into()));
    }
    let g = &r1.groupoid;
    let mut t: Vec<Option<Matrix>> = vec![None; g.n_objects()];
    for orbit in orbits(g) {
        let x0 = orbit[0];
        if orbit.iter().any(|&x| r1.dims[x] != r2.dims[x]) {
            return Ok(None);
        }
        let basis = intertwiner_basis(r1, r2, x0)?;
        let d = r1.dims[x0];
        if d > 0 {
            let hvv = intertwiner_basis(r1, r1, x0)?.len();
            let hww = intertwiner_basis(r2, r2, x0)?.len();
            if hvv != basis.len() || hww != basis.len() {
                return Ok(None);
            }
        }
        let t0 = invertible_combination(&basis, d)?;
        for &x in &orbit {
            // transporter x0 → x
            let s = g.hom(x, x0)[0];
            let inv = r1.mats[s].inverse().ok_or_else(|| Error::Internal("singular rep matrix".into()))?;
            t[x] = Some(r2.mats[s].mul(&t0)?.mul(&inv)?);
        }
    }
    let t: Vec<Matrix> = t.into_iter().map(|m| m.expect("every object lies in an orbit")).collect();
    if !is_rep_isomorphism(&t, r1, r2)? {
        return Err(Error::Internal("transported intertwiner is not an isomorphism".into()));
    }
    Ok(Some(t))
}

/// An invertible element of the span of `basis`, known to exist.
///
/// `det(Σ cᵢBᵢ)` is a nonzero polynomial of degree `d`, so a random point
/// with coordinates in a range much wider than `d` misses its zero set with
/// high probability; the seeded search keeps results reproducible.
fn invertible_combination(basis: &[Matrix], d: usize) -> Result<Matrix> {
    if d == 0 {
        return Ok(Matrix::identity(0));
    }
    if let Some(m) = basis.iter().find(|m| m.is_invertible()) {
        return Ok(m.clone());
    }
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let range = 8 * d as i64 + 8;
    for _ in 0..256 {
        let mut m = Matrix::zeros(d, d);
        for b in basis {
            let c = BigRational::from_integer(rng.gen_range(-range..=range).into());
            m = m.add(&b.scale(&c))?;
        }
        if m.is_invertible() {
            return Ok(m);
        }
    }
    // Exhaustive fallback over {0..=d}^k: a nonzero polynomial of degree
    // at most d in each variable cannot vanish on that whole grid.
    let k = basis.len();
    let mut coeffs = vec![0usize; k];
    loop {
        let mut m = Matrix::zeros(d, d);
        for (b, &c) in basis.iter().zip(&coeffs) {
            if c > 0 {
                m = m.add(&b.scale(&BigRational::from_integer(c.into())))?;
            }
        }
        if m.is_invertible() {
            return Ok(m);
        }
        let Some(i) = coeffs.iter().position(|&c| c < d) else {
            return Err(Error::Internal("no invertible intertwiner in the span".into()));
        };
        coeffs[i] += 1;
        for c in &mut coeffs[..i] {
            *c = 0;
        }
    }
}

/// Diagonal `±1` matrices, a convenience for building sign-like
/// representations.
pub fn signed_identity(d: usize, sign: bool) -> Matrix {
    let m = Matrix::identity(d);
    if sign {
        m.scale(&-BigRational::one())
    } else {
        m
    }
}
