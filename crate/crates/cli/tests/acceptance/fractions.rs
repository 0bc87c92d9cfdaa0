//! Fraction equality, composition and inverses, and agreement of the
//! homotopy-pullback equality test with the brute-force span search.

use std::sync::Arc;

use gpd_core::enumerate::all_maps;
use gpd_core::sample::{random_fraction, random_groupoid, random_weak_equivalence};
use gpd_core::*;
use rand::Rng;

use crate::common::{classes, rng};

fn refined(r: &mut impl Rng, fr: &Fraction) -> Result<Fraction, String> {
    let w = random_weak_equivalence(r, fr.apex());
    Ok(tri!(Fraction::new(tri!(fr.left().compose(&w)), tri!(fr.right().compose(&w)))))
}

fn equivalence_relation(triples: usize) -> Result<String, String> {
    let mut r = rng(4);
    let (mut done, mut chains) = (0, 0);
    while done < triples {
        let g = Arc::new(random_groupoid(&mut r, 6));
        let t = Arc::new(random_groupoid(&mut r, 6));
        let Some(a) = random_fraction(&mut r, &g, &t) else { continue };
        let b = refined(&mut r, &a)?;
        // every other triple has an unrelated third member
        let c = if done % 2 == 0 {
            refined(&mut r, &b)?
        } else {
            match random_fraction(&mut r, &g, &t) {
                Some(c) => c,
                None => continue,
            }
        };
        let fs = [&a, &b, &c];
        let mut eq = [[false; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                eq[i][j] = tri!(fraction_equal(fs[i], fs[j]));
            }
        }
        for i in 0..3 {
            ensure!(eq[i][i], "not reflexive");
            for j in 0..3 {
                ensure!(eq[i][j] == eq[j][i], "not symmetric");
                for k in 0..3 {
                    if eq[i][j] && eq[j][k] {
                        ensure!(eq[i][k], "not transitive");
                        chains += usize::from(i != j && j != k && i != k);
                    }
                }
            }
        }
        done += 1;
    }
    Ok(format!("{triples} triples ({chains} nontrivial chains)"))
}

fn associative_and_unital(triples: usize) -> Result<(), String> {
    let mut r = rng(5);
    let mut done = 0;
    while done < triples {
        let gs: Vec<Arc<FiniteGroupoid>> = (0..4).map(|_| Arc::new(random_groupoid(&mut r, 6))).collect();
        let (Some(a), Some(b), Some(c)) = (
            random_fraction(&mut r, &gs[0], &gs[1]),
            random_fraction(&mut r, &gs[1], &gs[2]),
            random_fraction(&mut r, &gs[2], &gs[3]),
        ) else {
            continue;
        };
        let left_unit = tri!(compose_fractions(&Fraction::identity(&gs[0]), &a));
        ensure!(tri!(fraction_equal(&left_unit, &a)), "identity∘a differs from a");
        let right_unit = tri!(compose_fractions(&a, &Fraction::identity(&gs[1])));
        ensure!(tri!(fraction_equal(&right_unit, &a)), "a∘identity differs from a");
        let ab_c = tri!(compose_fractions(&tri!(compose_fractions(&a, &b)), &c));
        let a_bc = tri!(compose_fractions(&a, &tri!(compose_fractions(&b, &c))));
        ensure!(tri!(fraction_equal(&ab_c, &a_bc)), "composition is not associative");
        done += 1;
    }
    Ok(())
}

fn inverses(count: usize) -> Result<(), String> {
    let mut r = rng(6);
    for _ in 0..count {
        let g = Arc::new(random_groupoid(&mut r, 8));
        let phi = random_weak_equivalence(&mut r, &g);
        // a weak equivalence out of the apex, as a quasi-inverse of one into it
        let w = random_weak_equivalence(&mut r, phi.domain());
        let (psi, _) = tri!(quasi_inverse(&w));
        let fr = tri!(Fraction::new(phi, psi));
        let inv = tri!(invert_fraction(&fr));
        let there = tri!(compose_fractions(&fr, &inv));
        ensure!(tri!(fraction_equal(&there, &Fraction::identity(fr.source()))), "fraction∘inverse differs from the identity");
        let back = tri!(compose_fractions(&inv, &fr));
        ensure!(tri!(fraction_equal(&back, &Fraction::identity(fr.target()))), "inverse∘fraction differs from the identity");
    }
    Ok(())
}

pub fn calculus() -> Result<String, String> {
    let rel = equivalence_relation(300)?;
    associative_and_unital(200)?;
    inverses(100)?;
    Ok(format!("{rel}, 200 composable triples, 100 inverses"))
}

/// Every fraction `g ⇜ h → t` with all three groupoids among `pool`.
fn fractions_between(pool: &[Arc<FiniteGroupoid>], g: &Arc<FiniteGroupoid>, t: &Arc<FiniteGroupoid>) -> Vec<Fraction> {
    let mut out = Vec::new();
    for h in pool {
        for phi in all_maps(h, g).into_iter().filter(is_weak_equivalence) {
            for psi in all_maps(h, t) {
                out.push(Fraction::new(phi.clone(), psi).expect("left leg is a weak equivalence"));
            }
        }
    }
    out
}

pub fn oracle_agreement() -> Result<String, String> {
    let pool = classes(3);
    let (mut pairs, mut equal) = (0, 0);
    for g in &pool {
        for t in &pool {
            let fs = fractions_between(&pool, g, t);
            for a in &fs {
                for b in &fs {
                    let fast = tri!(fraction_equal(a, b));
                    let slow = tri!(fraction_equal_oracle(a, b, 6));
                    ensure!(fast == slow, "disagreement (fraction_equal {fast}, oracle {slow}) on {a:?} and {b:?}");
                    pairs += 1;
                    equal += usize::from(fast);
                }
            }
        }
    }
    Ok(format!("{pairs} pairs ({equal} equal), 0 disagreements"))
}
