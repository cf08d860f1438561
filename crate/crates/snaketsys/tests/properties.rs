//! Property tests for the structural invariants of every module.
//!
//! Inputs are drawn by `proptest` as seeds and small parameters; the combinatorial objects
//! themselves (height functions, snakes, data) are grown from a seeded generator so that
//! every case is valid by construction and reproducible from its seed.

mod common;

use proptest::prelude::*;
use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use snaketsys::io::{from_json, to_json, DatumJson, RelationJson, SnakeJson, TableJson};
use snaketsys::lusztig::{rho_step, rho_step_ordered, star_vertex_datum, Carrier, VertexDatum, WordDatum};
use snaketsys::quiver::{Flavor, HeightFunction, Region, Vertex};
use snaketsys::realize::{cuspidal_monomial, relation_monomials, CustomTable, Monomial, Realization, StarRule};
use snaketsys::reineke::{epsilon, epsilon_any, epsilon_brute, epsilon_star, omega, parity, BRUTE_FORCE_LIMIT};
use snaketsys::roots::{Root, TypeA};
use snaketsys::snakes::{is_prime_snake, is_snake, qr_sequences, random_snake, random_window_snake, translate_twisted};
use snaketsys::tsystem::extended_tsystem;
use snaketsys::verify::{applicable_moves, longest_word, random_vertex_datum, random_word_datum};
use std::collections::BTreeMap;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_xi(r: &mut ChaCha8Rng, twisted: bool) -> HeightFunction {
    if twisted {
        HeightFunction::random_twisted(r.random_range(2..=4), r).unwrap()
    } else {
        HeightFunction::random_untwisted(r.random_range(1..=6), r).unwrap()
    }
}

/// A random reduced word of `w₀`, reached by a random walk of moves from a fixed one.
fn random_longest_word(n: usize, r: &mut ChaCha8Rng, steps: usize) -> Vec<usize> {
    let mut w = longest_word(n);
    for _ in 0..steps {
        let Some(&(three, p)) = applicable_moves(&w).choose(r) else { break };
        if three {
            let (a, b) = (w[p - 1], w[p]);
            w[p - 1] = b;
            w[p] = a;
            w[p + 1] = b;
        } else {
            w.swap(p, p + 1);
        }
    }
    w
}

fn sorted(mut roots: Vec<Root>) -> Vec<Root> {
    roots.sort_by_key(|r| (r.lo, r.hi));
    roots
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn longest_words_enumerate_every_positive_root(seed: u64, n in 1usize..=7) {
        let ta = TypeA::new(n).unwrap();
        let w = random_longest_word(n, &mut rng(seed), 60);
        let inv = ta.inversion_sequence(&w).unwrap();
        prop_assert_eq!(inv.len(), n * (n + 1) / 2);
        prop_assert_eq!(sorted(inv), sorted(ta.positive_roots()));
    }

    #[test]
    fn star_and_reflections_are_involutions(n in 1usize..=8, i_raw: usize, lo_raw: usize, len_raw: usize, neg: bool) {
        let ta = TypeA::new(n).unwrap();
        let i = 1 + i_raw % n;
        prop_assert_eq!(ta.star(ta.star(i)), i);
        let lo = 1 + lo_raw % n;
        let hi = lo + len_raw % (n + 1 - lo);
        let r = if neg { Root::interval(lo, hi).negate() } else { Root::interval(lo, hi) };
        prop_assert_eq!(ta.reflect(i, ta.reflect(i, r).unwrap()).unwrap(), r);
    }

    #[test]
    fn moves_permute_inversion_roots(seed: u64, n in 2usize..=6) {
        let mut r = rng(seed);
        let ta = TypeA::new(n).unwrap();
        let w = random_longest_word(n, &mut r, 30);
        let before = ta.inversion_sequence(&w).unwrap();
        let d = WordDatum::new(ta, w.clone(), vec![0; w.len()]).unwrap();
        for &(three, p) in &applicable_moves(&w) {
            let e = if three { d.apply_three_move(p).unwrap() } else { d.two_move(p).unwrap() };
            let after = ta.inversion_sequence(e.word()).unwrap();
            let mut expected = before.clone();
            if three {
                expected[p - 1..=p + 1].reverse();
            } else {
                expected.swap(p, p + 1);
            }
            prop_assert_eq!(after, expected);
        }
    }

    #[test]
    fn moves_are_involutions_and_preserve_weight(seed: u64, n in 1usize..=6) {
        let mut r = rng(seed);
        let mut d = random_word_datum(n, 5, &mut r).unwrap();
        for _ in 0..50 {
            let Some(&(three, p)) = applicable_moves(d.word()).choose(&mut r) else { break };
            let mv = |x: &WordDatum| if three { x.apply_three_move(p) } else { x.two_move(p) };
            let e = mv(&d).unwrap();
            prop_assert_eq!(&mv(&e).unwrap(), &d);
            prop_assert_eq!(e.weight(), d.weight());
            d = e;
        }
    }

    #[test]
    fn star_datum_is_an_involution(seed: u64, n in 1usize..=6) {
        let d = random_word_datum(n, 4, &mut rng(seed)).unwrap();
        prop_assert_eq!(d.star_datum().unwrap().star_datum().unwrap(), d.clone());
        let c = random_vertex_datum(Carrier::Delta { n, delta: (seed % 2) as u8 }, 4, &mut rng(seed)).unwrap();
        prop_assert_eq!(star_vertex_datum(&star_vertex_datum(&c).unwrap()).unwrap(), c);
    }

    #[test]
    fn duality_preserves_the_path_order(seed: u64, twisted: bool) {
        let mut r = rng(seed);
        let xi = random_xi(&mut r, twisted);
        let vs = snaketsys::snakes::vertices_between(&xi, -8, 16);
        for _ in 0..20 {
            let (a, b) = (*vs.choose(&mut r).unwrap(), *vs.choose(&mut r).unwrap());
            prop_assert!(xi.is_vertex(xi.dual(a)) && xi.dual_inv(xi.dual(a)) == a);
            prop_assert_eq!(xi.preceq(a, b), xi.preceq(xi.dual(a), xi.dual(b)), "{} {}", a, b);
        }
    }

    #[test]
    fn phi_does_not_depend_on_the_reading(seed: u64, twisted: bool) {
        let mut r = rng(seed);
        let xi = random_xi(&mut r, twisted);
        let first = common::oracle_phi(&xi, &mut r);
        prop_assert_eq!(&first, &common::oracle_phi(&xi, &mut r));
        prop_assert_eq!(first, xi.phi_map().unwrap());
    }

    #[test]
    fn window_has_one_vertex_per_positive_root(seed: u64, twisted: bool) {
        let xi = random_xi(&mut rng(seed), twisted);
        let n = xi.n();
        prop_assert_eq!(xi.gamma_window().len(), n * (n + 1) / 2);
    }

    #[test]
    fn twisted_duality_swaps_regions(seed: u64) {
        let mut r = rng(seed);
        let xi = random_xi(&mut r, true);
        for v in snaketsys::snakes::vertices_between(&xi, -8, 8) {
            let swapped = match xi.region(v).unwrap() {
                Region::Lt => Region::Gt,
                Region::Gt => Region::Lt,
                Region::D => Region::U,
                Region::U => Region::D,
            };
            prop_assert_eq!(xi.region(xi.dual(v)).unwrap(), swapped, "{}", v);
        }
    }

    #[test]
    fn rho_triples_commute(seed: u64, n0 in 2usize..=5) {
        let mut r = rng(seed);
        let d = random_vertex_datum(Carrier::GammaBigTheta { n0 }, 4, &mut r).unwrap();
        let mut cur = d;
        for j in n0..2 * n0 {
            let mut order: Vec<usize> = (0..2 * n0 - 1 - j).collect();
            order.shuffle(&mut r);
            let next = rho_step(j, &cur).unwrap();
            prop_assert_eq!(&rho_step_ordered(j, &cur, &order).unwrap(), &next);
            cur = next;
        }
        prop_assert_eq!(cur.carrier(), Carrier::GammaTheta { n0 });
    }

    #[test]
    fn epsilon_of_a_unit_vector_is_zero_or_one(n in 1usize..=6, j_raw: usize, idx: usize, delta in 0u8..=1) {
        let carrier = Carrier::Delta { n, delta };
        let vs = carrier.vertices();
        let d = VertexDatum::indicator(carrier, &[vs[idx % vs.len()]]).unwrap();
        let j = 1 + j_raw % n;
        prop_assert!(epsilon_any(j, &d).unwrap() <= 1);
        prop_assert!(epsilon_star(j, &d).unwrap() <= 1);
    }

    #[test]
    fn min_cut_agrees_with_enumeration(seed: u64, n in 1usize..=6) {
        let mut r = rng(seed);
        for j in 1..=n {
            if omega(n, j).unwrap().vertices.len() > BRUTE_FORCE_LIMIT {
                continue;
            }
            let c = random_vertex_datum(Carrier::Delta { n, delta: parity(j) }, 4, &mut r).unwrap();
            prop_assert_eq!(epsilon(j, &c).unwrap(), epsilon_brute(j, &c).unwrap());
        }
    }

    #[test]
    fn epsilon_star_is_epsilon_of_the_starred_datum(seed: u64, n in 1usize..=6, delta in 0u8..=1) {
        let c = random_vertex_datum(Carrier::Delta { n, delta }, 4, &mut rng(seed)).unwrap();
        let cv = star_vertex_datum(&c).unwrap();
        for j in 1..=n {
            prop_assert_eq!(epsilon_star(j, &c).unwrap(), epsilon_any(j, &cv).unwrap());
            // Starring twice returns the datum, so the roles swap.
            prop_assert_eq!(epsilon_star(j, &cv).unwrap(), epsilon_any(j, &c).unwrap());
        }
    }

    #[test]
    fn duality_preserves_snakes_and_primality(seed: u64, twisted: bool, prime: bool, len in 1usize..=5) {
        let mut r = rng(seed);
        let xi = random_xi(&mut r, twisted);
        let p = random_snake(&xi, &mut r, len, prime, -6, 6);
        for sign in [1, -1] {
            let dp: Vec<Vertex> = p.iter().map(|&v| xi.dualize_vertex(v, sign)).collect();
            prop_assert!(is_snake(&xi, &dp));
            prop_assert_eq!(is_prime_snake(&xi, &dp), is_prime_snake(&xi, &p));
        }
    }

    #[test]
    fn qr_members_are_vertices_forming_disjoint_snakes(seed: u64, twisted: bool, len in 2usize..=5) {
        let mut r = rng(seed);
        let xi = random_xi(&mut r, twisted);
        let p = random_snake(&xi, &mut r, len, true, -6, 6);
        prop_assume!(p.len() >= 2);
        let (q, rr) = qr_sequences(&xi, &p).unwrap();
        prop_assert!(q.iter().chain(&rr).all(|&v| xi.is_vertex(v)));
        prop_assert!(is_snake(&xi, &q) && is_snake(&xi, &rr));
        prop_assert!(q.iter().all(|v| !rr.contains(v)));
    }

    #[test]
    fn relation_slices_balance(seed: u64, twisted: bool, len in 2usize..=6) {
        let mut r = rng(seed);
        let xi = random_xi(&mut r, twisted);
        let p = random_snake(&xi, &mut r, len, true, -6, 6);
        prop_assume!(p.len() >= 2);
        let rel = extended_tsystem(&xi, &p).unwrap();
        let mut lhs: Vec<Vertex> = rel.b.iter().chain(&rel.c).copied().collect();
        let mut rhs: Vec<Vertex> = rel.a.iter().chain(&rel.d).copied().collect();
        lhs.sort();
        rhs.sort();
        prop_assert_eq!(lhs, rhs);
        let real = if twisted { Realization::QDatumB } else { Realization::QDatumA };
        prop_assert!(relation_monomials(&rel, &real, &xi).unwrap().balanced());
    }

    #[test]
    fn custom_realizations_balance(seed: u64, twisted: bool, len in 2usize..=5, h_dual in 2i64..=9, identity: bool) {
        let mut r = rng(seed);
        let xi = random_xi(&mut r, twisted);
        let entries: BTreeMap<Vertex, Monomial> = xi
            .gamma_window()
            .into_iter()
            .map(|v| (v, Monomial::y(r.random_range(1..h_dual), r.random_range(-9..=9))))
            .collect();
        let star = if identity { StarRule::Identity } else { StarRule::TypeA };
        let real = Realization::Custom(CustomTable { h_dual, star, entries });
        let p = random_snake(&xi, &mut r, len, true, -12, 12);
        prop_assume!(p.len() >= 2);
        let rel = extended_tsystem(&xi, &p).unwrap();
        let m = relation_monomials(&rel, &real, &xi).unwrap();
        prop_assert!(m.balanced() && !m.exact);
    }

    #[test]
    fn duality_shift_is_invertible(node in 1i64..=8, spectral in -20i64..=20, t in -4i64..=4, identity: bool) {
        let star = if identity { StarRule::Identity } else { StarRule::TypeA };
        let m = Monomial::from_factors([((node, spectral), 2), ((9 - node, spectral - 3), 1)]);
        prop_assert_eq!(m.d_shift(t, 9, star).d_shift(-t, 9, star), m);
    }

    #[test]
    fn folded_realization_identifies_starred_nodes(seed: u64) {
        let mut r = rng(seed);
        let xi = random_xi(&mut r, true);
        for v in snaketsys::snakes::vertices_between(&xi, -6, 6) {
            let w = Vertex::new(xi.star(v.i), v.k2);
            if xi.is_vertex(w) {
                prop_assert_eq!(
                    cuspidal_monomial(&Realization::QDatumB, &xi, v).unwrap(),
                    cuspidal_monomial(&Realization::QDatumB, &xi, w).unwrap()
                );
            }
        }
    }

    #[test]
    fn translation_respects_segments(seed: u64, n0 in 2usize..=5) {
        // Points in Lt are kept, and slicing P at a point of Lt slices P† at that point.
        let mut r = rng(seed);
        let xi = HeightFunction::big_theta(n0).unwrap();
        let p = random_window_snake(&xi, &mut r, 2 * n0);
        let dagger = translate_twisted(&xi, &p).unwrap();
        prop_assert!(is_snake(&HeightFunction::theta(n0).unwrap(), &dagger));
        for (s, &v) in p.iter().enumerate() {
            if v.i < n0 {
                let head = translate_twisted(&xi, &p[..s]).unwrap();
                let tail = translate_twisted(&xi, &p[s + 1..]).unwrap();
                let joined: Vec<Vertex> = head.iter().copied().chain([v]).chain(tail).collect();
                prop_assert_eq!(&joined, &dagger);
            }
        }
    }

    #[test]
    fn json_formats_round_trip(seed: u64, twisted: bool, len in 2usize..=4) {
        let mut r = rng(seed);
        let xi = random_xi(&mut r, twisted);
        let p = random_snake(&xi, &mut r, len, true, -6, 6);
        let s = SnakeJson::new(&xi, &p);
        prop_assert_eq!(&from_json::<SnakeJson>(&to_json(&s)).unwrap(), &s);
        prop_assert_eq!(s.vertices().unwrap(), p.clone());
        if p.len() >= 2 {
            let rel = extended_tsystem(&xi, &p).unwrap();
            let j = RelationJson::new(&rel, true, None);
            let back = from_json::<RelationJson>(&to_json(&j)).unwrap();
            prop_assert_eq!(back.relation(), rel);
        }
        let n = r.random_range(1..=5);
        let d = random_vertex_datum(Carrier::Delta { n, delta: (seed % 2) as u8 }, 5, &mut r).unwrap();
        prop_assert_eq!(from_json::<DatumJson>(&to_json(&DatumJson::new(&d))).unwrap().to_datum(None).unwrap(), d);
        let table = CustomTable {
            h_dual: 5,
            star: StarRule::Identity,
            entries: xi.gamma_window().into_iter().map(|v| (v, Monomial::y(1, v.k2))).collect(),
        };
        prop_assert_eq!(from_json::<TableJson>(&to_json(&TableJson::new(&table))).unwrap().table(), table);
    }
}

#[test]
fn untwisted_flavor_round_trips_through_its_name() {
    for f in [Flavor::Untwisted, Flavor::Twisted] {
        assert_eq!(f.to_string().parse::<Flavor>().unwrap(), f);
    }
}
