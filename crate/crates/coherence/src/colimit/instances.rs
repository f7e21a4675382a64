//! Ready-made indexes and diagrams.
//!
//! Everything here is small enough to search exhaustively.  Each diagram is
//! picked to exercise one behaviour: a collapse that reproduces its value, a
//! designated sub-index that folds onto a terminal object, an invertible
//! index 2-cell that merges parallel generators, or an evaluation at a
//! representable whose invertible transformations match the objects of the
//! value category.

use std::collections::BTreeMap;

use super::cat::{CategoryBuilder, FiniteCategory, FiniteFunctor, NatTransf};
use super::twocat::{FiniteTwoCategory, GammaImage, TwoCatBuilder, TwoDiagram};
use crate::error::{Error, Result};

/// Two objects and the single arrow `f : x -> y`.
pub fn walking_arrow() -> FiniteCategory {
    let mut b = CategoryBuilder::new("arrow");
    let x = b.object("x");
    let y = b.object("y");
    b.morphism("f", x, y);
    b.build().expect("fixed data validates")
}

/// Two objects joined by a pair of mutually inverse arrows.
pub fn chaotic_pair() -> FiniteCategory {
    let mut b = CategoryBuilder::new("pair");
    let x = b.object("x");
    let y = b.object("y");
    let u = b.morphism("u", x, y);
    let v = b.morphism("v", y, x);
    b.composite(v, u, b.identity_of(x));
    b.composite(u, v, b.identity_of(y));
    b.build().expect("fixed data validates")
}

/// The chain `x -> y -> z` with its composite written down.
pub fn chain_three() -> FiniteCategory {
    let mut b = CategoryBuilder::new("chain3");
    let x = b.object("x");
    let y = b.object("y");
    let z = b.object("z");
    let xy = b.morphism("xy", x, y);
    let yz = b.morphism("yz", y, z);
    let xz = b.morphism("xz", x, z);
    b.composite(yz, xy, xz);
    b.build().expect("fixed data validates")
}

pub fn point_index() -> FiniteTwoCategory {
    FiniteTwoCategory::from_category(&FiniteCategory::discrete("point", &["*"]))
        .expect("fixed data validates")
}

/// Objects `a -> t`, one connecting 1-cell, identity 2-cells only.
pub fn arrow_index() -> FiniteTwoCategory {
    let mut b = CategoryBuilder::new("arrow-index");
    let a = b.object("a");
    let t = b.object("t");
    b.morphism("f", a, t);
    FiniteTwoCategory::from_category(&b.build().expect("fixed data validates"))
        .expect("fixed data validates")
}

/// Two parallel 1-cells `I, I' : a -> t` joined by an invertible 2-cell.
pub fn parallel_pair_index() -> FiniteTwoCategory {
    let mut hb = CategoryBuilder::new("hom.a.t");
    let i0 = hb.object("I");
    let i1 = hb.object("I'");
    let up = hb.morphism("iota", i0, i1);
    let down = hb.morphism("iota_inv", i1, i0);
    hb.composite(down, up, hb.identity_of(i0));
    hb.composite(up, down, hb.identity_of(i1));
    let hom_at = hb.build().expect("fixed data validates");

    let mut b = TwoCatBuilder::new("parallel-pair");
    let a = b.object("a");
    let t = b.object("t");
    b.hom(a, t, hom_at);
    b.build().expect("fixed data validates")
}

/// Two legs into a shared sink: `a -> t <- b`.
pub fn cospan_index() -> FiniteTwoCategory {
    let mut b = CategoryBuilder::new("cospan");
    let a = b.object("a");
    let c = b.object("b");
    let t = b.object("t");
    b.morphism("f", a, t);
    b.morphism("g", c, t);
    FiniteTwoCategory::from_category(&b.build().expect("fixed data validates"))
        .expect("fixed data validates")
}

/// The chain `a -> b -> t` together with the composite leg `a -> t`.
pub fn triangle_index() -> FiniteTwoCategory {
    let mut b = CategoryBuilder::new("triangle");
    let a = b.object("a");
    let m = b.object("b");
    let t = b.object("t");
    let f = b.morphism("f", a, m);
    let g = b.morphism("g", m, t);
    let h = b.morphism("h", a, t);
    b.composite(g, f, h);
    FiniteTwoCategory::from_category(&b.build().expect("fixed data validates"))
        .expect("fixed data validates")
}

/// Fills the identity assignments on the diagonal; off-diagonal entries
/// start empty and get overridden by the caller.
fn base_table(
    index: &FiniteTwoCategory,
    values: &[FiniteCategory],
) -> BTreeMap<(usize, usize), Vec<FiniteFunctor>> {
    let mut table = BTreeMap::new();
    for i in 0..index.object_count() {
        for j in 0..index.object_count() {
            let fs = if i == j {
                vec![FiniteFunctor::identity(&values[i]); index.hom(i, j).object_count()]
            } else {
                Vec::new()
            };
            table.insert((i, j), fs);
        }
    }
    table
}

/// Finishes a diagram over an index with identity 2-cells only: every index
/// 2-cell goes to the identity transformation of its boundary.
pub fn one_step_diagram(
    index: FiniteTwoCategory,
    values: Vec<FiniteCategory>,
    functors: BTreeMap<(usize, usize), Vec<FiniteFunctor>>,
) -> Result<TwoDiagram> {
    let mut two_maps = BTreeMap::new();
    for i in 0..index.object_count() {
        for j in 0..index.object_count() {
            let hom = index.hom(i, j);
            let fs = functors.get(&(i, j)).ok_or_else(|| {
                Error::invalid(format!("no functor list for the hom-category {i} -> {j}"))
            })?;
            let ts = (0..hom.morphism_count())
                .map(|m| NatTransf::identity(&values[j], &fs[hom.morphism(m).source]))
                .collect();
            two_maps.insert((i, j), ts);
        }
    }
    TwoDiagram::new(index, values, functors, two_maps)
}

fn point_of(name: &str) -> FiniteCategory {
    FiniteCategory::discrete(name, &["p"])
}

fn const_functor(source: &FiniteCategory, target: &FiniteCategory, obj: usize) -> FiniteFunctor {
    FiniteFunctor {
        obj: vec![obj; source.object_count()],
        mor: vec![target.identity(obj); source.morphism_count()],
    }
}

/// The arrow sitting over a single index object.  Collapsing must give the
/// arrow back, up to isomorphism.
pub fn point_diagram() -> (TwoDiagram, GammaImage) {
    let index = point_index();
    let d = TwoDiagram::constant(&index, &walking_arrow()).expect("fixed data validates");
    (d, GammaImage::empty())
}

/// One point flowing into the arrow, every cell designated.  The sink is a
/// relative terminal, and the collapse lands on its value.
pub fn arrow_diagram() -> (TwoDiagram, GammaImage) {
    let index = arrow_index();
    let src = point_of("src");
    let tgt = walking_arrow();
    let mut table = base_table(&index, &[src.clone(), tgt.clone()]);
    table.insert((0, 1), vec![const_functor(&src, &tgt, 0)]);
    let gamma = GammaImage::full(&index);
    (one_step_diagram(index, vec![src, tgt], table).expect("fixed data validates"), gamma)
}

/// Two points flowing into the two ends of the arrow, every cell
/// designated.
pub fn cospan_diagram() -> (TwoDiagram, GammaImage) {
    let index = cospan_index();
    let left = point_of("left");
    let right = point_of("right");
    let tgt = walking_arrow();
    let mut table = base_table(&index, &[left.clone(), right.clone(), tgt.clone()]);
    table.insert((0, 2), vec![const_functor(&left, &tgt, 0)]);
    table.insert((1, 2), vec![const_functor(&right, &tgt, 1)]);
    let gamma = GammaImage::full(&index);
    (one_step_diagram(index, vec![left, right, tgt], table).expect("fixed data validates"), gamma)
}

/// A point passed along two designated steps into the arrow, with the
/// composite leg recorded in the index.
pub fn triangle_diagram() -> (TwoDiagram, GammaImage) {
    let index = triangle_index();
    let start = point_of("start");
    let middle = point_of("middle");
    let tgt = walking_arrow();
    let mut table = base_table(&index, &[start.clone(), middle.clone(), tgt.clone()]);
    table.insert((0, 1), vec![const_functor(&start, &middle, 0)]);
    table.insert((1, 2), vec![const_functor(&middle, &tgt, 0)]);
    table.insert((0, 2), vec![const_functor(&start, &tgt, 0)]);
    let gamma = GammaImage::full(&index);
    (one_step_diagram(index, vec![start, middle, tgt], table).expect("fixed data validates"), gamma)
}

/// A point under the parallel pair, with the two legs landing on the two
/// ends of an invertible arrow and the index 2-cell carried to it.  Nothing
/// is designated; the quotient still merges the two generator families.
pub fn parallel_pair_diagram() -> TwoDiagram {
    let index = parallel_pair_index();
    let src = point_of("src");
    let tgt = chaotic_pair();
    let u = tgt.morphism_named("u").expect("fixed data");
    let v = tgt.morphism_named("v").expect("fixed data");
    let to_x = const_functor(&src, &tgt, 0);
    let to_y = const_functor(&src, &tgt, 1);

    let mut one_maps = base_table(&index, &[src.clone(), tgt.clone()]);
    one_maps.insert((0, 1), vec![to_x.clone(), to_y]);

    let hom = index.hom(0, 1);
    let mut crossing = vec![NatTransf { components: vec![0] }; hom.morphism_count()];
    crossing[hom.identity(0)] = NatTransf { components: vec![tgt.identity(0)] };
    crossing[hom.identity(1)] = NatTransf { components: vec![tgt.identity(1)] };
    crossing[hom.morphism_named("iota").expect("fixed data")] = NatTransf { components: vec![u] };
    crossing[hom.morphism_named("iota_inv").expect("fixed data")] =
        NatTransf { components: vec![v] };

    let mut two_maps = BTreeMap::new();
    two_maps.insert((0, 0), vec![NatTransf::identity(&src, &FiniteFunctor::identity(&src))]);
    two_maps.insert((1, 1), vec![NatTransf::identity(&tgt, &FiniteFunctor::identity(&tgt))]);
    two_maps.insert((0, 1), crossing);
    two_maps.insert((1, 0), Vec::new());

    TwoDiagram::new(index, vec![src, tgt], one_maps, two_maps).expect("fixed data validates")
}

/// The arrow sitting over a single index object, probed at that object.
pub fn yoneda_point() -> (TwoDiagram, usize) {
    let index = point_index();
    let d = TwoDiagram::constant(&index, &walking_arrow()).expect("fixed data validates");
    (d, 0)
}

/// The arrow embedded into the chain by `x -> x`, `y -> z`, probed at the
/// source of the index.  Four transformations exist out of the
/// representable; exactly two have invertible comparisons, one per object
/// of the value at the probe.
pub fn yoneda_arrow() -> (TwoDiagram, usize) {
    let index = arrow_index();
    let ka = walking_arrow();
    let kt = chain_three();
    let embed = FiniteFunctor {
        obj: vec![
            kt.object_named("x").expect("fixed data"),
            kt.object_named("z").expect("fixed data"),
        ],
        mor: vec![
            kt.identity(kt.object_named("x").expect("fixed data")),
            kt.identity(kt.object_named("z").expect("fixed data")),
            kt.morphism_named("xz").expect("fixed data"),
        ],
    };
    let mut table = base_table(&index, &[ka.clone(), kt.clone()]);
    table.insert((0, 1), vec![embed]);
    (one_step_diagram(index, vec![ka, kt], table).expect("fixed data validates"), 0)
}

/// Both parallel 1-cells act as the identity on the arrow and the index
/// 2-cell acts trivially, probed at the source.  Compatibility with the
/// invertible 2-cell forces every transformation to compare the two legs
/// through the same cell.
pub fn yoneda_parallel_pair() -> (TwoDiagram, usize) {
    let index = parallel_pair_index();
    let v = walking_arrow();
    let mut one_maps = base_table(&index, &[v.clone(), v.clone()]);
    one_maps.insert((0, 1), vec![FiniteFunctor::identity(&v), FiniteFunctor::identity(&v)]);

    let mut two_maps = BTreeMap::new();
    two_maps.insert((0, 0), vec![NatTransf::identity(&v, &FiniteFunctor::identity(&v))]);
    two_maps.insert((1, 1), vec![NatTransf::identity(&v, &FiniteFunctor::identity(&v))]);
    two_maps.insert(
        (0, 1),
        vec![
            NatTransf::identity(&v, &FiniteFunctor::identity(&v));
            index.hom(0, 1).morphism_count()
        ],
    );
    two_maps.insert((1, 0), Vec::new());

    let d = TwoDiagram::new(index, vec![v.clone(), v], one_maps, two_maps)
        .expect("fixed data validates");
    (d, 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_shipped_instance_constructs() {
        let (d, gamma) = point_diagram();
        gamma.validate(&d.index).unwrap();
        let (d, gamma) = arrow_diagram();
        gamma.validate(&d.index).unwrap();
        let (d, gamma) = cospan_diagram();
        gamma.validate(&d.index).unwrap();
        let (d, gamma) = triangle_diagram();
        gamma.validate(&d.index).unwrap();
        parallel_pair_diagram();
        yoneda_point();
        yoneda_arrow();
        yoneda_parallel_pair();
    }

    #[test]
    fn the_triangle_index_records_its_composite() {
        let t = triangle_index();
        assert_eq!(t.hom(0, 2).object_count(), 1);
        assert_eq!(t.hcomp_cell(0, 1, 2, 0, 0), 0);
    }
}
