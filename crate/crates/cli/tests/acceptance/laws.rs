//! Every constructor re-validates on an exhaustive small sweep and on
//! random larger inputs.

use std::sync::Arc;

use gpd_core::enumerate::{all_maps, groups_of_order};
use gpd_core::group::{left_regular_action, natural_action};
use gpd_core::sample::{random_action, random_fraction, random_group, random_groupoid, random_map};
use gpd_core::*;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::common::{classes, revalidate, rng};

/// Every action of `group` on `0..n`, one per homomorphism into `S_n`.
fn actions_on(group: &Group, n: usize) -> Vec<Vec<Vec<usize>>> {
    let perms = natural_action(n);
    gpd_core::enumerate::group_homomorphisms(group, &Group::symmetric(n))
        .into_iter()
        .map(|phi| phi.iter().map(|&p| perms[p].clone()).collect())
        .collect()
}

fn is_free(group: &Group, action: &[Vec<usize>]) -> bool {
    (0..group.order())
        .filter(|&g| g != group.identity())
        .all(|g| action[g].iter().enumerate().all(|(x, &y)| x != y))
}

/// Actions must build; gauge groupoids exactly when the action is free.
fn action_and_gauge(group: &Group, action: &[Vec<usize>]) -> Result<(), String> {
    revalidate(&tri!(action_groupoid(group, action)))?;
    match gauge_groupoid(group, action) {
        Ok(g) => {
            ensure!(is_free(group, action), "gauge groupoid built for a non-free action {action:?}");
            revalidate(&g)
        }
        Err(_) => {
            ensure!(!is_free(group, action), "gauge groupoid refused for a free action {action:?}");
            Ok(())
        }
    }
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |m| (0..n).filter(|&i| m & (1 << i) != 0).collect())
}

fn covers(cover: &[Vec<usize>], n: usize) -> bool {
    (0..n).all(|x| cover.iter().any(|c| c.contains(&x)))
}

/// Sub-families of the nonempty subsets of `0..n` with at most `k` members.
fn families(n: usize, k: usize) -> Vec<Vec<Vec<usize>>> {
    let charts: Vec<Vec<usize>> = subsets(n).filter(|s| !s.is_empty()).collect();
    let mut out = vec![Vec::new()];
    let mut frontier: Vec<(usize, Vec<Vec<usize>>)> = vec![(0, Vec::new())];
    for _ in 0..k {
        let mut next = Vec::new();
        for (start, fam) in &frontier {
            for (i, c) in charts.iter().enumerate().skip(*start) {
                let mut f = fam.clone();
                f.push(c.clone());
                out.push(f.clone());
                next.push((i + 1, f));
            }
        }
        frontier = next;
    }
    out
}

fn cech(n: usize, cover: &[Vec<usize>]) -> Result<(), String> {
    match cech_groupoid(n, cover) {
        Ok(g) => {
            ensure!(covers(cover, n), "Čech groupoid built for a non-cover {cover:?} of {n}");
            revalidate(&g)
        }
        Err(_) => {
            ensure!(!covers(cover, n), "Čech groupoid refused for the cover {cover:?} of {n}");
            Ok(())
        }
    }
}

fn beta(fr: &Fraction) -> Result<(), String> {
    let fb = tri!(fraction_to_bibundle(fr));
    tri!(fb.bibundle.check());
    let alpha = tri!(bibundle_to_fraction(&fb.bibundle));
    revalidate(alpha.fraction.apex())?;
    if fb.bibundle.is_left_principal() {
        revalidate(&tri!(gauge_from_bibundle(&fb.bibundle)).gauge.groupoid)?;
    }
    Ok(())
}

fn pullback(f1: &GroupoidMap, f2: &GroupoidMap) -> Result<(), String> {
    let pb = tri!(homotopy_pullback(f1, f2));
    revalidate(&pb.groupoid)?;
    tri!(pb.to_first.check());
    tri!(pb.to_second.check());
    tri!(pb.witness.check());
    Ok(())
}

fn exhaustive() -> Result<usize, String> {
    let mut count = 0;
    let mut tick = |r: Result<(), String>| r.map(|()| count += 1);
    for n in 0..=4 {
        tick(revalidate(&unit_groupoid(n)))?;
        tick(revalidate(&pair_groupoid(n)))?;
    }
    let groups: Vec<Group> = (1..=6).flat_map(|k| groups_of_order(k).unwrap()).collect();
    for grp in &groups {
        tick(revalidate(&group_groupoid(grp)))?;
        for n in 0..=4 {
            for act in actions_on(grp, n) {
                tick(action_and_gauge(grp, &act))?;
            }
        }
        tick(revalidate(&arrow_groupoid(&Arc::new(group_groupoid(grp))).groupoid))?;
    }
    for n in 0..=4 {
        for m in 0..=4 {
            let mut f = vec![0; n];
            if m == 0 && n > 0 {
                continue;
            }
            loop {
                tick(revalidate(&kernel_pair_groupoid(&f)))?;
                let Some(i) = f.iter().position(|&v| v + 1 < m) else { break };
                f[i] += 1;
                f[..i].iter_mut().for_each(|v| *v = 0);
            }
        }
        for fam in families(n, 4) {
            tick(cech(n, &fam))?;
        }
    }
    let small = classes(4);
    let mut with_pairs = small.clone();
    with_pairs.push(Arc::new(pair_groupoid(4)));
    with_pairs.push(Arc::new(unit_groupoid(4)));
    for g in &with_pairs {
        tick(revalidate(&arrow_groupoid(g).groupoid))?;
        for s in subsets(g.n_objects()) {
            let r = tri!(restriction(g, &s));
            revalidate(&r.groupoid)?;
            tick(r.inclusion.check().map_err(|e| e.to_string()))?;
        }
    }
    for c in &small {
        for a in &small {
            let fa = all_maps(a, c);
            if fa.is_empty() {
                continue;
            }
            for b in &small {
                for f2 in all_maps(b, c) {
                    for f1 in &fa {
                        tick(pullback(f1, &f2))?;
                    }
                }
            }
        }
    }
    let tiny = classes(3);
    for g in &tiny {
        for t in &tiny {
            for h in &tiny {
                let legs: Vec<GroupoidMap> = all_maps(h, g).into_iter().filter(is_weak_equivalence).collect();
                for phi in &legs {
                    for psi in all_maps(h, t) {
                        tick(beta(&tri!(Fraction::new(phi.clone(), psi))))?;
                    }
                }
            }
        }
    }
    Ok(count)
}

fn randomized(cases: usize) -> Result<(), String> {
    let mut r = rng(1);
    for i in 0..cases {
        match i % 10 {
            0 => {
                revalidate(&unit_groupoid(r.gen_range(5..60)))?;
                revalidate(&pair_groupoid(r.gen_range(5..20)))?;
            }
            1 => revalidate(&group_groupoid(&random_group(&mut r, 24)))?,
            2 => {
                let grp = random_group(&mut r, 12);
                let act = random_action(&mut r, &grp, 10);
                action_and_gauge(&grp, &act)?;
            }
            3 => {
                let m = r.gen_range(1..6);
                let f: Vec<usize> = (0..r.gen_range(0..12)).map(|_| r.gen_range(0..m)).collect();
                revalidate(&kernel_pair_groupoid(&f))?;
            }
            4 => {
                let n = r.gen_range(1..9);
                let mut cover: Vec<Vec<usize>> = (0..r.gen_range(1..5))
                    .map(|_| (0..n).filter(|_| r.gen_bool(0.4)).collect())
                    .collect();
                let missing: Vec<usize> = (0..n).filter(|x| !cover.iter().any(|c| c.contains(x))).collect();
                if !missing.is_empty() && r.gen_bool(0.8) {
                    cover.push(missing);
                }
                cech(n, &cover)?;
            }
            5 => {
                // disjoint copies of the regular action are free
                let grp = random_group(&mut r, 8);
                let copies = r.gen_range(1..4);
                let reg = left_regular_action(&grp);
                let o = grp.order();
                let act: Vec<Vec<usize>> =
                    reg.iter().map(|row| (0..copies).flat_map(|c| row.iter().map(move |&y| y + c * o)).collect()).collect();
                action_and_gauge(&grp, &act)?;
            }
            6 => revalidate(&arrow_groupoid(&Arc::new(random_groupoid(&mut r, 8))).groupoid)?,
            7 => {
                let g = Arc::new(random_groupoid(&mut r, 30));
                let mut s: Vec<usize> = g.objects().filter(|_| r.gen_bool(0.5)).collect();
                s.shuffle(&mut r);
                revalidate(&tri!(restriction(&g, &s)).groupoid)?;
            }
            8 => {
                let c = Arc::new(random_groupoid(&mut r, 10));
                let a = Arc::new(random_groupoid(&mut r, 10));
                let b = Arc::new(random_groupoid(&mut r, 10));
                if let (Some(f1), Some(f2)) = (random_map(&mut r, &a, &c), random_map(&mut r, &b, &c)) {
                    pullback(&f1, &f2)?;
                }
            }
            _ => {
                let g = Arc::new(random_groupoid(&mut r, 8));
                let t = Arc::new(random_groupoid(&mut r, 8));
                if let Some(fr) = random_fraction(&mut r, &g, &t) {
                    beta(&fr)?;
                }
            }
        }
    }
    Ok(())
}

pub fn constructors() -> Result<String, String> {
    let n = exhaustive()?;
    randomized(1000)?;
    Ok(format!("{n} exhaustive constructions, 1000 random cases"))
}
