// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.
use std::collections::BTreeMap;

use curling_core::graph::*;
use curling_core::invariants::*;
use curling_core::sequence::*;
use num_bigint::BigUint;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::{bfs_distance, curling_by_definition, isomorphic, random_connected};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>(), 0.0f64..0.6)
        .prop_map(|(n, seed, p)| random_connected(&mut ChaCha8Rng::seed_from_u64(seed), n, p))
}

fn arb_sequence() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(1i64..=3, 1..=12)
}

fn max_multiplicity(g: &Graph) -> usize {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for d in g.degrees() {
        *counts.entry(d).or_default() += 1;
    }
    counts.into_values().max().unwrap()
}

#[test]
fn strategies_agree_exhaustively() {
    let naive = strategy("naive").unwrap();
    let zscan = strategy("zscan").unwrap();
    for len in 1..=12u32 {
        for code in 0..3usize.pow(len) {
            let mut c = code;
            let s: Vec<i64> = (0..len)
                .map(|_| {
                    let v = (c % 3) as i64 + 1;
                    c /= 3;
                    v
                })
                .collect();
            let want = curling_by_definition(&s);
            assert_eq!(naive.curling_number(&s).unwrap(), want, "{s:?}");
            assert_eq!(zscan.curling_number(&s).unwrap(), want, "{s:?}");
        }
    }
}

#[test]
fn ladder_and_square_are_c4() {
    let c4 = cycle(4).unwrap();
    assert!(isomorphic(&ladder(2).unwrap(), &c4));
    let p2 = path(2).unwrap();
    assert!(isomorphic(&cartesian_product(&p2, &p2), &c4));
    assert!(isomorphic(&wheel(4).unwrap(), &complete(4).unwrap()));
    assert!(!isomorphic(&path(4).unwrap(), &c4));
}

proptest! {
    #[test]
    fn curling_matches_definition(s in prop::collection::vec(-2i64..=4, 1..=40)) {
        prop_assert_eq!(curling_number(&s).unwrap(), curling_by_definition(&s));
    }

    #[test]
    fn run_decomposition_round_trips(s in arb_sequence()) {
        let d = run_decompose(&s);
        prop_assert_eq!(d.expand(), s.clone());
        for w in d.runs().windows(2) {
            prop_assert_ne!(w[0].value, w[1].value);
        }
        let rebuilt = RunDecomposition::from_runs(d.runs().iter().map(|r| (r.value, r.exponent))).unwrap();
        prop_assert_eq!(rebuilt, d.clone());
        let product: BigUint = d.runs().iter().map(|r| BigUint::from(r.exponent)).product();
        prop_assert_eq!(compound_curling(&d).unwrap(), product);
    }

    #[test]
    fn curling_bounds_final_run(s in arb_sequence()) {
        let k = curling_number(&s).unwrap();
        let d = run_decompose(&s);
        prop_assert!(k >= 1);
        prop_assert!(k >= d.runs().last().unwrap().exponent);
    }

    #[test]
    fn single_run_compound(v in -5i64..=5, e in 1usize..50) {
        let d = RunDecomposition::from_runs([(v, e)]).unwrap();
        prop_assert_eq!(compound_curling(&d).unwrap(), BigUint::from(e));
        prop_assert_eq!(curling_number(&d.expand()).unwrap(), e);
    }

    #[test]
    fn extension_composes(s in arb_sequence(), a in 0usize..20, b in 0usize..20) {
        let once = extend_by_curling(&s, a + b).unwrap();
        let twice = extend_by_curling(&extend_by_curling(&s, a).unwrap(), b).unwrap();
        prop_assert_eq!(&once, &twice);
        prop_assert_eq!(&once[..s.len()], &s[..]);
        for i in s.len()..once.len() {
            prop_assert_eq!(once[i] as usize, curling_by_definition(&once[..i]));
        }
    }

    #[test]
    fn handshake(g in arb_graph(20)) {
        prop_assert_eq!(g.degree_sequence().sum(), 2 * g.edge_count());
        prop_assert!(g.is_connected());
    }

    #[test]
    fn power_is_monotone_and_matches_bfs(g in arb_graph(14), r in 1usize..6) {
        let lower = power(&g, r).unwrap();
        let upper = power(&g, r + 1).unwrap();
        prop_assert!(g.is_spanning_subgraph_of(&lower));
        prop_assert!(lower.is_spanning_subgraph_of(&upper));
        let n = g.vertex_count();
        for u in 0..n {
            for v in 0..n {
                let near = u != v && bfs_distance(&g, u, v).unwrap() <= r;
                prop_assert_eq!(lower.has_edge(u, v), near);
            }
        }
    }

    #[test]
    fn power_at_diameter_is_complete(g in arb_graph(14)) {
        let d = g.diameter().finite().unwrap();
        prop_assert!(power(&g, d.max(1)).unwrap().is_complete());
        if d > 1 {
            prop_assert!(!power(&g, d - 1).unwrap().is_complete());
        }
    }

    #[test]
    fn product_degrees_add(g in arb_graph(8), h in arb_graph(8)) {
        let p = cartesian_product(&g, &h);
        prop_assert_eq!(p.vertex_count(), g.vertex_count() * h.vertex_count());
        prop_assert_eq!(
            p.edge_count(),
            g.edge_count() * h.vertex_count() + h.edge_count() * g.vertex_count()
        );
        for a in 0..g.vertex_count() {
            for b in 0..h.vertex_count() {
                prop_assert_eq!(p.degree(a * h.vertex_count() + b), g.degree(a) + h.degree(b));
            }
        }
    }

    #[test]
    fn join_and_corona_degrees(g in arb_graph(10), h in arb_graph(10)) {
        let (n, m) = (g.vertex_count(), h.vertex_count());
        let j = join(&g, &h);
        prop_assert_eq!(j.edge_count(), g.edge_count() + h.edge_count() + n * m);
        for v in 0..n {
            prop_assert_eq!(j.degree(v), g.degree(v) + m);
        }
        for v in 0..m {
            prop_assert_eq!(j.degree(n + v), h.degree(v) + n);
        }
        let c = corona_k1(&g);
        prop_assert_eq!(c.vertex_count(), 2 * n);
        for v in 0..n {
            prop_assert_eq!(c.degree(v), g.degree(v) + 1);
            prop_assert_eq!(c.neighbors(n + v), &[v][..]);
        }
    }

    #[test]
    fn cn_is_max_multiplicity(g in arb_graph(16)) {
        prop_assert_eq!(cn_graph(&g).unwrap(), max_multiplicity(&g));
        let cnc = cnc_graph(&g).unwrap();
        prop_assert!(cnc >= BigUint::from(cn_graph(&g).unwrap()));
    }

    #[test]
    fn canonical_string_is_optimal(g in arb_graph(9)) {
        let degrees: Vec<i64> = g.degrees().into_iter().map(|d| d as i64).collect();
        prop_assert_eq!(cn_graph(&g).unwrap(), max_arrangement_cn(&degrees).unwrap());
    }

    #[test]
    fn identity_count_tracks_regularity(g in arb_graph(16)) {
        let ic = ic_graph(&g).unwrap();
        prop_assert_eq!(ic == 1, g.is_regular());
        if g.is_regular() {
            prop_assert_eq!(cnc_graph(&g).unwrap(), BigUint::from(cn_graph(&g).unwrap()));
            prop_assert_eq!(vartheta_graph(&g).unwrap(), BigUint::from(1u32));
        } else {
            let factorial: BigUint = (1..=ic).map(BigUint::from).product();
            prop_assert_eq!(vartheta_graph(&g).unwrap(), factorial + ic);
        }
    }

    #[test]
    fn union_rule_agrees(parts in prop::collection::vec(arb_graph(6), 1..=4)) {
        let rule = union_rule_cn(&parts).unwrap();
        prop_assert!(rule.agree, "{:?}", rule);
        let union = disjoint_union(&parts).unwrap();
        prop_assert_eq!(rule.computed_value, max_multiplicity(&union));
    }

    #[test]
    fn edge_list_round_trips(g in arb_graph(15)) {
        prop_assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }
}
