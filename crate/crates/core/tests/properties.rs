//! Randomized invariants over small triangles.

use proptest::prelude::*;

use trimat::cli::{parse_cellset, CellSetDocument};
use trimat::combin::{binomial, unrank_mask};
use trimat::matroid::MatroidContext;
use trimat::tiler::{
    annulus_tiling, lozenge_tiling, max_rhombi_tiling, reconfigure_up, unsupported_unit_downs,
    validate_tiling, HoleyRegion, Tiling,
};
use trimat::trigrid::{
    binom2, saturation, tri_intersect, tri_join, triangular_hull, CellSet, LatticeTri, UpCell,
};

fn cellset_in(n: u32) -> impl Strategy<Value = CellSet> {
    let cap = (n * (n + 1) / 2) as usize;
    proptest::collection::vec(any::<bool>(), cap).prop_map(move |bits| {
        CellSet::from_indices(
            n,
            bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i),
        )
        .unwrap()
    })
}

/// A random subset of `T_n` for `n` in `1..=max_n`.
fn cellset(max_n: u32) -> impl Strategy<Value = CellSet> {
    (1..=max_n).prop_flat_map(cellset_in)
}

fn cellset_pair(max_n: u32) -> impl Strategy<Value = (CellSet, CellSet)> {
    (1..=max_n).prop_flat_map(|n| (cellset_in(n), cellset_in(n)))
}

fn triangle_in(n: u32) -> impl Strategy<Value = LatticeTri> {
    (0..n)
        .prop_flat_map(move |p| (Just(p), 0..n - p))
        .prop_flat_map(move |(p, q)| (Just(p), Just(q), 0..n - p - q))
        .prop_map(move |(p, q, r)| LatticeTri::new(p, q, r, n - p - q - r).unwrap())
}

fn triangle(max_n: u32) -> impl Strategy<Value = LatticeTri> {
    (1..=max_n).prop_flat_map(triangle_in)
}

fn triangle_pair(max_n: u32) -> impl Strategy<Value = (LatticeTri, LatticeTri)> {
    (1..=max_n).prop_flat_map(|n| (triangle_in(n), triangle_in(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn independence_is_hereditary(s in cellset(7)) {
        let ctx = MatroidContext::new(s.n()).unwrap();
        if ctx.is_independent(&s) {
            for u in s.iter() {
                prop_assert!(ctx.is_independent(&s.without(u)));
            }
        }
    }

    #[test]
    fn violation_witness_is_overfull(s in cellset(7)) {
        let ctx = MatroidContext::new(s.n()).unwrap();
        match ctx.violation(&s) {
            None => prop_assert!(ctx.is_independent(&s)),
            Some((t, count)) => {
                prop_assert!(count > t.k as usize);
                prop_assert_eq!(s.intersection_len(&t.cells()), count);
            }
        }
    }

    #[test]
    fn rank_is_bounded_unit_increasing_and_submodular(s in cellset(7), picks in any::<[u8; 2]>()) {
        let ctx = MatroidContext::new(s.n()).unwrap();
        let r = ctx.rank(&s);
        prop_assert!(r <= s.len() && r <= s.n() as usize);
        prop_assert_eq!(r == s.len(), ctx.is_independent(&s));
        let cells: Vec<UpCell> = s.complement().iter().collect();
        if cells.len() >= 2 {
            let x = cells[picks[0] as usize % cells.len()];
            let y = cells[picks[1] as usize % cells.len()];
            let sx = s.with(x).unwrap();
            let sy = s.with(y).unwrap();
            let sxy = sx.with(y).unwrap();
            prop_assert!(ctx.rank(&sx) - r <= 1);
            prop_assert!(ctx.rank(&sx) + ctx.rank(&sy) >= ctx.rank(&sxy) + r);
        }
    }

    #[test]
    fn greedy_and_matching_ranks_agree(s in cellset(8)) {
        let ctx = MatroidContext::new(s.n()).unwrap();
        let b = ctx.greedy_basis(&s);
        prop_assert!(b.is_subset(&s) && ctx.is_independent(&b));
        prop_assert_eq!(ctx.rank_via_matching(&s).unwrap(), b.len());
    }

    #[test]
    fn closure_is_a_closure_operator((s, t) in cellset_pair(6)) {
        let ctx = MatroidContext::new(s.n()).unwrap();
        let cl = ctx.closure(&s);
        prop_assert!(s.is_subset(&cl));
        prop_assert_eq!(&ctx.closure(&cl), &cl);
        prop_assert_eq!(ctx.rank(&cl), ctx.rank(&s));
        let st = s.union(&t).unwrap();
        prop_assert!(cl.is_subset(&ctx.closure(&st)));
        prop_assert!(ctx.is_flat_closure(&cl));
    }

    #[test]
    fn max_rhombi_tiling_counts(s in cellset(8)) {
        let ctx = MatroidContext::new(s.n()).unwrap();
        let t = max_rhombi_tiling(&HoleyRegion::new(s.clone()));
        let check = validate_tiling(&t);
        prop_assert!(check.is_valid(), "{:?}", check.issues);
        let r = ctx.rank(&s);
        let lost = s.len() - r;
        prop_assert_eq!(check.counts.rhombus, binom2(s.n()) - lost);
        prop_assert_eq!(check.counts.unit_down, lost);
        prop_assert_eq!(check.counts.unit_up, s.n() as usize - r);
    }

    #[test]
    fn lozenge_tilings_exist_exactly_for_bases(s in cellset(8)) {
        let ctx = MatroidContext::new(s.n()).unwrap();
        let t = lozenge_tiling(&HoleyRegion::new(s.clone()));
        prop_assert_eq!(t.is_some(), ctx.is_basis(&s));
        if let Some(t) = t {
            prop_assert!(validate_tiling(&t).is_valid());
        }
    }

    #[test]
    fn reconfiguration_preserves_counts(s in cellset(8)) {
        let t = max_rhombi_tiling(&HoleyRegion::new(s));
        let r = reconfigure_up(&t).unwrap();
        prop_assert!(validate_tiling(&r).is_valid());
        prop_assert_eq!(r.counts(), t.counts());
        prop_assert!(unsupported_unit_downs(&r).is_empty());
    }

    #[test]
    fn dropping_a_tile_is_detected(s in cellset(6), pick in any::<u8>()) {
        let t = max_rhombi_tiling(&HoleyRegion::new(s));
        prop_assume!(!t.tiles.is_empty());
        let mut tiles = t.tiles.clone();
        tiles.remove(pick as usize % tiles.len());
        prop_assert!(!validate_tiling(&Tiling::new(t.region.clone(), tiles)).is_valid());
    }

    #[test]
    fn annulus_tilings_are_valid(t in triangle(14)) {
        let n = t.n();
        let tiling = annulus_tiling(n, &t).unwrap();
        let check = validate_tiling(&tiling);
        prop_assert!(check.is_valid(), "{:?}", check.issues);
        prop_assert_eq!(check.counts.t1, (n - t.k) as usize);
        prop_assert_eq!(check.counts.t2, 0);
    }

    #[test]
    fn hull_is_the_smallest_containing_triangle(s in cellset(9)) {
        prop_assume!(!s.is_empty());
        let h = triangular_hull(&s).unwrap();
        prop_assert!(s.iter().all(|u| h.contains_up(u)));
        // shrinking any side drops a cell
        for t in trimat::trigrid::lattice_triangles(s.n()).unwrap() {
            if t.k < h.k {
                prop_assert!(!s.iter().all(|u| t.contains_up(u)));
            }
        }
        prop_assert_eq!(saturation(&h, &s).unwrap().count, s.len());
    }

    #[test]
    fn triangle_meet_and_join((t, u) in triangle_pair(9)) {
        let (ct, cu) = (t.cells(), u.cells());
        let both = ct.intersection(&cu).unwrap();
        match tri_intersect(&t, &u).unwrap() {
            None => prop_assert!(both.is_empty()),
            Some(m) => prop_assert_eq!(m.cells(), both),
        }
        let j = tri_join(&t, &u).unwrap();
        prop_assert_eq!(j, triangular_hull(&ct.union(&cu).unwrap()).unwrap());
    }

    #[test]
    fn documents_roundtrip(s in cellset(9), label in proptest::option::of("[a-z ]{0,12}")) {
        let doc = CellSetDocument::from_cellset(&s, label);
        prop_assert_eq!(&parse_cellset(&doc.to_json()).unwrap(), &doc);
        let plain = parse_cellset(&doc.to_plain()).unwrap();
        prop_assert_eq!(plain.to_cellset(), s);
    }

    #[test]
    fn unranking_lists_distinct_k_subsets(n in 1u32..=12, k_seed in any::<u32>(), r_seed in any::<u64>()) {
        let k = k_seed % (n + 1);
        let total = binomial(n as u64, k as u64);
        let r = r_seed % total;
        let m = unrank_mask(n, k, r);
        prop_assert_eq!(m.count_ones(), k);
        prop_assert!(n == 64 || m >> n == 0);
        if r + 1 < total {
            prop_assert!(unrank_mask(n, k, r + 1) > m);
        }
    }
}
