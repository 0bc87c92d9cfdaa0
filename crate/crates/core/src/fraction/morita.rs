use std::sync::Arc;

use super::Fraction;
use crate::error::Result;
use crate::groupoid::{isotropy, orbit_representatives, FiniteGroupoid};
use crate::morphism::{group_isomorphic, is_weak_equivalence, skeleton, GroupoidMap};

#[derive(Debug, Clone)]
pub struct MoritaVerdict {
    pub equivalent: bool,
    /// On a positive verdict, a span of weak equivalences through the
    /// skeleton of the first groupoid.
    pub span: Option<Fraction>,
}

/// Decides Morita equivalence by matching orbits with isomorphic isotropy
/// groups.
///
/// Orbits of `g` are taken in order of their representatives and each is
/// matched with the first unmatched orbit of `h` whose isotropy group is
/// isomorphic; since group isomorphism is an equivalence relation, greedy
/// matching succeeds iff the isotropy multisets agree.
pub fn morita_equivalent(g: &Arc<FiniteGroupoid>, h: &Arc<FiniteGroupoid>) -> Result<MoritaVerdict> {
    let no = MoritaVerdict { equivalent: false, span: None };
    let reps_g = orbit_representatives(g);
    let reps_h = orbit_representatives(h);
    if reps_g.len() != reps_h.len() {
        return Ok(no);
    }
    let iso_g = reps_g.iter().map(|&x| isotropy(g, x)).collect::<Result<Vec<_>>>()?;
    let iso_h = reps_h.iter().map(|&x| isotropy(h, x)).collect::<Result<Vec<_>>>()?;
    let mut matched = vec![None; reps_h.len()];
    let mut partner = Vec::with_capacity(reps_g.len());
    for a in &iso_g {
        let mut found = None;
        for (j, b) in iso_h.iter().enumerate() {
            if matched[j].is_some() {
                continue;
            }
            if let Some(w) = group_isomorphic(&a.group, &b.group)? {
                found = Some((j, w));
                break;
            }
        }
        match found {
            Some((j, w)) => {
                matched[j] = Some(());
                partner.push((j, w));
            }
            None => return Ok(no),
        }
    }

    // Right leg: skeleton of g → h, orbit i to rep_h[partner i] through the
    // chosen isotropy isomorphism.
    let sk = skeleton(g);
    let s = &sk.groupoid;
    let on_objects: Vec<_> = s.objects().map(|i| reps_h[partner[i].0]).collect();
    let mut on_arrows = Vec::with_capacity(s.n_arrows());
    for a in s.arrows() {
        let i = s.src(a);
        let original = sk.inclusion.arrow(a);
        let idx = iso_g[i]
            .arrows
            .iter()
            .position(|&b| b == original)
            .expect("skeleton arrows are isotropy arrows");
        let (j, w) = &partner[i];
        on_arrows.push(iso_h[*j].arrows[w[idx]]);
    }
    let right = GroupoidMap::new(s.clone(), h.clone(), on_objects, on_arrows)?;
    debug_assert!(is_weak_equivalence(&right));
    let span = Fraction::new(sk.inclusion, right)?;
    Ok(MoritaVerdict {
        equivalent: true,
        span: Some(span),
    })
}
