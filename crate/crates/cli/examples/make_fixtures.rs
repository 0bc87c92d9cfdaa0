//! Writes the fixture corpus under `tests/fixtures`. Canonical files are
//! exactly what the encoders print, one line each.
//!
//! cargo run -p gpd-cli --example make_fixtures

use std::fs;
use std::path::Path;
use std::sync::Arc;

use gpd_core::format::{bibundle_json, fraction_json, group_json, groupoid_json, map_json, rep_json};
use gpd_core::group::{left_regular_action, natural_action, trivial_action};
use gpd_core::*;
use serde_json::{json, Value};

fn write(dir: &Path, name: &str, v: &Value) {
    fs::write(dir.join(name), format!("{v}\n")).unwrap();
}

fn constant_map(h: &Arc<FiniteGroupoid>, g: &Arc<FiniteGroupoid>, y: ObjectId) -> GroupoidMap {
    GroupoidMap::new(h.clone(), g.clone(), vec![y; h.n_objects()], vec![g.unit(y); h.n_arrows()]).unwrap()
}

fn main() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures");
    fs::create_dir_all(&dir).unwrap();

    let point = Arc::new(unit_groupoid(1));
    let unit2 = Arc::new(unit_groupoid(2));
    let pair2 = Arc::new(pair_groupoid(2));
    let pair4 = Arc::new(pair_groupoid(4));
    let z2g = Group::cyclic(2);
    let z2 = Arc::new(group_groupoid(&z2g));
    let z3 = Arc::new(group_groupoid(&Group::cyclic(3)));
    let swap = Arc::new(action_groupoid(&z2g, &left_regular_action(&z2g)).unwrap());
    let groupoids: Vec<(&str, FiniteGroupoid)> = vec![
        ("point.json", (*point).clone()),
        ("unit2.json", (*unit2).clone()),
        ("unit3.json", unit_groupoid(3)),
        ("pair2.json", (*pair2).clone()),
        ("pair3.json", pair_groupoid(3)),
        ("pair4.json", (*pair4).clone()),
        ("z2.json", (*z2).clone()),
        ("z3.json", (*z3).clone()),
        ("s3.json", group_groupoid(&Group::symmetric(3))),
        ("z2_swap.json", (*swap).clone()),
        ("z2_fixed2.json", action_groupoid(&z2g, &trivial_action(&z2g, 2)).unwrap()),
        ("s3_on_3.json", action_groupoid(&Group::symmetric(3), &natural_action(3)).unwrap()),
        ("kernel_pair.json", kernel_pair_groupoid(&[0, 0, 1])),
        ("cech.json", cech_groupoid(3, &[vec![0, 1], vec![1, 2]]).unwrap()),
        ("gauge_z2.json", gauge_groupoid(&z2g, &left_regular_action(&z2g)).unwrap()),
        ("arrow_z2.json", (*arrow_groupoid(&z2).groupoid).clone()),
        ("z2_plus_point.json", disjoint_union(&[(*z2).clone(), (*point).clone()])),
    ];
    for (name, g) in &groupoids {
        write(&dir, name, &groupoid_json(g));
    }
    write(&dir, "group_s3.json", &group_json(&Group::symmetric(3)));

    // maps
    write(&dir, "map_pair4_point.json", &map_json(&constant_map(&pair4, &point, 0)));
    write(&dir, "map_z2_point.json", &map_json(&constant_map(&z2, &point, 0)));
    write(&dir, "map_unit2_point.json", &map_json(&constant_map(&unit2, &point, 0)));
    write(&dir, "map_point_unit2.json", &map_json(&constant_map(&point, &unit2, 1)));
    let sk = skeleton(&pair2);
    write(&dir, "map_point_pair2.json", &map_json(&sk.inclusion));

    // fractions
    let id_z2 = Fraction::identity(&z2);
    write(&dir, "frac_id_z2.json", &fraction_json(&id_z2));
    let trivial_z2 = Fraction::from_map(&constant_map(&z2, &z2, 0));
    write(&dir, "frac_trivial_z2.json", &fraction_json(&trivial_z2));
    // pair2 ⇜ point → point: the collapse of pair2, presented on its skeleton
    let collapse = Fraction::new(sk.inclusion.clone(), GroupoidMap::identity(&sk.groupoid)).unwrap();
    write(&dir, "frac_collapse.json", &fraction_json(&collapse));
    write(&dir, "frac_collapse_direct.json", &fraction_json(&Fraction::from_map(&constant_map(&pair2, &point, 0))));
    let fb = fraction_to_bibundle(&collapse).unwrap();
    write(&dir, "bib_collapse.json", &bibundle_json(&fb.bibundle));
    write(&dir, "bib_unit_z2.json", &bibundle_json(&unit_bibundle(&z2)));
    // right principal only: the trivial map is not a weak equivalence
    write(&dir, "bib_trivial_z2.json", &bibundle_json(&fraction_to_bibundle(&trivial_z2).unwrap().bibundle));

    // representations of Z/2
    let sign = validate_rep(z2.clone(), vec![1], z2.arrows().map(|a| signed_identity(1, !z2.is_unit(a))).collect()).unwrap();
    let swap_m = Matrix::from_ints(&[&[0, 1], &[1, 0]]);
    let regular = validate_rep(
        z2.clone(),
        vec![2],
        z2.arrows().map(|a| if z2.is_unit(a) { Matrix::identity(2) } else { swap_m.clone() }).collect(),
    )
    .unwrap();
    let trivial = trivial_rep(&z2);
    write(&dir, "rep_z2_trivial.json", &rep_json(&trivial));
    write(&dir, "rep_z2_sign.json", &rep_json(&sign));
    write(&dir, "rep_z2_regular.json", &rep_json(&regular));
    write(&dir, "rep_z2_sum.json", &rep_json(&direct_sum(&trivial, &sign).unwrap()));
    write(&dir, "rep_z2_half.json", &json!({ "dims": [1], "mats": [[["1"]], [["1/2"]]] }));

    // broken inputs
    let mut flipped = groupoid_json(&pair2);
    for row in flipped["mul"].as_array_mut().unwrap() {
        let r: Vec<u64> = row.as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect();
        if !pair2.is_unit(r[0] as usize) && !pair2.is_unit(r[1] as usize) {
            let other = pair2.arrows().find(|&a| a as u64 != r[2]).unwrap();
            *row = json!([r[0], r[1], other]);
            break;
        }
    }
    write(&dir, "bad_flipped.json", &flipped);
    fs::write(dir.join("bad_truncated.json"), "{\"n_objects\": 1, \"arrows\": [\n").unwrap();
    let mut not_functor = map_json(&constant_map(&z2, &z2, 0));
    not_functor["on_arrows"] = json!([0, 0]);
    let nontrivial = z2.arrows().find(|&a| !z2.is_unit(a)).unwrap();
    not_functor["on_arrows"][z2.unit(0)] = json!(nontrivial);
    write(&dir, "bad_map.json", &not_functor);
    let mut short = bibundle_json(&unit_bibundle(&z2));
    short["lmom"] = json!([]);
    write(&dir, "bad_bibundle.json", &short);

    // a fraction whose groupoids are file references
    let mut refs = fraction_json(&id_z2);
    refs["apex"] = json!("z2.json");
    for leg in ["left", "right"] {
        refs[leg]["domain"] = json!("z2.json");
        refs[leg]["codomain"] = json!("z2.json");
    }
    write(&dir, "ref_frac_id_z2.json", &refs);
}
