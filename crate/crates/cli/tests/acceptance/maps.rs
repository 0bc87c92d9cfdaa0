//! Weak equivalences: the orbit/isotropy characterization, base change,
//! two out of three and Morita equivalence.

use std::sync::Arc;

use gpd_core::enumerate::all_maps;
use gpd_core::group::left_regular_action;
use gpd_core::sample::{random_groupoid, random_map, random_weak_equivalence};
use gpd_core::*;

use crate::common::{classes, rng};

/// Fully faithful by comparing every hom-set with its image.
fn fully_faithful(f: &GroupoidMap) -> bool {
    let (h, g) = (f.domain(), f.codomain());
    h.objects().all(|x| {
        h.objects().all(|y| {
            let mut image: Vec<ArrowId> = h.hom(y, x).iter().map(|&a| f.arrow(a)).collect();
            image.sort_unstable();
            image.dedup();
            image.len() == h.hom(y, x).len() && image == g.hom(f.object(y), f.object(x))
        })
    })
}

fn surjective_on_objects(f: &GroupoidMap) -> bool {
    let mut hit = vec![false; f.codomain().n_objects()];
    for &y in f.on_objects() {
        hit[y] = true;
    }
    hit.into_iter().all(|b| b)
}

pub fn charequi() -> Result<String, String> {
    let small = classes(4);
    let (mut maps, mut weqs) = (0, 0);
    for h in &small {
        for g in &small {
            for f in all_maps(h, g) {
                let w = is_weak_equivalence(&f);
                ensure!(w == charequi_check(&f), "disagreement on {f:?}");
                maps += 1;
                weqs += usize::from(w);
            }
        }
    }
    let mut r = rng(2);
    let (mut random, mut random_weqs) = (0, 0);
    while random < 1000 {
        let g = Arc::new(random_groupoid(&mut r, 20));
        let f = if random % 2 == 1 {
            let w = random_weak_equivalence(&mut r, &g);
            if w.domain().n_arrows() > 20 {
                continue;
            }
            w
        } else {
            let h = Arc::new(random_groupoid(&mut r, 20));
            let Some(f) = random_map(&mut r, &h, &g) else { continue };
            f
        };
        let w = is_weak_equivalence(&f);
        ensure!(w == charequi_check(&f), "disagreement on random map {f:?}");
        random += 1;
        random_weqs += usize::from(w);
    }
    Ok(format!(
        "{maps} exhaustive maps ({weqs} weak equivalences), {random} random ({random_weqs} weak equivalences), 0 disagreements"
    ))
}

pub fn base_change() -> Result<String, String> {
    let mut r = rng(3);
    let mut done = 0;
    while done < 500 {
        let g = Arc::new(random_groupoid(&mut r, 12));
        let h = Arc::new(random_groupoid(&mut r, 10));
        let f1 = random_weak_equivalence(&mut r, &g);
        let Some(f2) = random_map(&mut r, &h, &g) else { continue };
        ensure!(tri!(base_change_is_surjective_equivalence(&f1, &f2)), "projection is not a surjective equivalence");
        let pb = tri!(homotopy_pullback(&f1, &f2));
        let p = &pb.to_second;
        ensure!(surjective_on_objects(p) && fully_faithful(p), "projection fails the direct hom-set check");
        done += 1;
    }
    Ok("500 random pairs, 0 failures".into())
}

pub fn two_out_of_three() -> Result<String, String> {
    let small = classes(4);
    let maps: Vec<Vec<Vec<GroupoidMap>>> = small.iter().map(|a| small.iter().map(|b| all_maps(a, b)).collect()).collect();
    let mut pairs = 0;
    for (i, _) in small.iter().enumerate() {
        for (j, _) in small.iter().enumerate() {
            for (k, _) in small.iter().enumerate() {
                for f in &maps[i][j] {
                    let wf = is_weak_equivalence(f);
                    for g in &maps[j][k] {
                        let gf = tri!(g.compose(f));
                        let (wg, wgf) = (is_weak_equivalence(g), is_weak_equivalence(&gf));
                        ensure!(!(wf && wg) || wgf, "composite of weak equivalences is not one");
                        ensure!(!(wg && wgf) || wf, "first factor fails to be a weak equivalence");
                        ensure!(!(wf && wgf) || wg, "second factor fails to be a weak equivalence");
                        pairs += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{pairs} composable pairs, 0 counterexamples"))
}

pub fn morita() -> Result<String, String> {
    let small = classes(4);
    let (mut pairs, mut equivalent) = (0, 0);
    for a in &small {
        for b in &small {
            let v = tri!(morita_equivalent(a, b));
            let oracle = tri!(span_search_oracle(a, b, 6));
            ensure!(v.equivalent == oracle, "disagreement: decision {} oracle {oracle}", v.equivalent);
            if let Some(span) = &v.span {
                ensure!(is_weak_equivalence(span.left()) && is_weak_equivalence(span.right()), "span legs are not weak equivalences");
            }
            pairs += 1;
            equivalent += usize::from(oracle);
        }
    }
    let point = Arc::new(unit_groupoid(1));
    let z2 = Group::cyclic(2);
    let named = [
        ("pair(2) ~ point", Arc::new(pair_groupoid(2)), true),
        ("pair(3) ~ point", Arc::new(pair_groupoid(3)), true),
        ("pair(4) ~ point", Arc::new(pair_groupoid(4)), true),
        ("Z/2 vs point", Arc::new(group_groupoid(&z2)), false),
        ("Z/2 swap ~ point", Arc::new(action_groupoid(&z2, &left_regular_action(&z2)).unwrap()), true),
    ];
    for (name, g, expected) in named {
        let v = tri!(morita_equivalent(&g, &point));
        ensure!(v.equivalent == expected, "{name}: got {}", v.equivalent);
        ensure!(tri!(span_search_oracle(&g, &point, 6)) == expected, "{name}: oracle disagrees");
    }
    Ok(format!("{pairs} pairs ({equivalent} equivalent), 5 named fixtures"))
}
