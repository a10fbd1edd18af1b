//! Cross-module invariants: enumeration witness soundness, export
//! round-trips, and bound checks on the length records.

use std::collections::BTreeSet;
use std::sync::Arc;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use grs_selfdual::construct::{self, Family, TheoremParams, Variant};
use grs_selfdual::enumerate;
use grs_selfdual::field::FieldCtx;
use grs_selfdual::grs::GrsCode;
use grs_selfdual::verify;

fn variant_of(rec: &enumerate::LengthRecord) -> Variant {
    match rec.variant_label() {
        "n" => Variant::N,
        "n+1" => Variant::NPlusOne,
        _ => Variant::NPlusTwo,
    }
}

#[test]
fn witnesses_revalidate_at_large_q() {
    // q = 169^2: every sampled witness must pass the structural validator
    // and claim an applicable variant of the right length.
    let q = 169u64 * 169;
    let ctx = Arc::new(FieldCtx::new(13, 2).unwrap());
    assert_eq!(ctx.q(), q);
    let mut rng = ChaCha8Rng::seed_from_u64(1699);
    for family in [Family::T31, Family::T32] {
        let mut recs = enumerate::lengths_theorem(q, family).unwrap();
        recs.shuffle(&mut rng);
        for rec in recs.iter().take(100) {
            let params =
                TheoremParams::new(ctx.clone(), family, rec.e1, rec.e2, rec.s, rec.t).unwrap();
            let case = construct::validate(&params).unwrap();
            let variant = variant_of(rec);
            assert!(case.allows(variant), "{family} witness for n = {} rejected", rec.n);
            let expected_n1 = rec.s * rec.f1 + rec.t * rec.f2;
            assert_eq!(case.n1, expected_n1);
            let built_len = match variant {
                Variant::N => case.n1,
                Variant::NPlusOne => case.n1 + 1,
                Variant::NPlusTwo => case.n1 + 2,
            };
            assert_eq!(built_len, rec.n);
        }
    }
}

#[test]
fn witnesses_construct_at_moderate_q() {
    // q <= 169: sampled witnesses construct codes that verify in full.
    for q in [121u64, 169] {
        let (_, p, m) = enumerate::odd_prime_power_root(q).unwrap();
        let ctx = Arc::new(FieldCtx::new(p, m).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(q);
        for family in [Family::T31, Family::T32] {
            let mut recs = enumerate::lengths_theorem(q, family).unwrap();
            recs.shuffle(&mut rng);
            for rec in recs.iter().take(100) {
                let params =
                    TheoremParams::new(ctx.clone(), family, rec.e1, rec.e2, rec.s, rec.t)
                        .unwrap();
                let code = construct::construct_code(&params, variant_of(rec)).unwrap();
                assert_eq!(code.length() as u64, rec.n);
                assert!(verify::is_self_dual(&code).pass, "n = {} over q = {q}", rec.n);
            }
        }
    }
}

#[test]
fn length_records_even_and_bounded() {
    for q in [25u64, 81, 22201] {
        let mut all: Vec<enumerate::LengthRecord> = Vec::new();
        all.extend(enumerate::lengths_theorem(q, Family::T31).unwrap());
        all.extend(enumerate::lengths_theorem(q, Family::T32).unwrap());
        all.extend(enumerate::lengths_ref18(q).unwrap());
        all.extend(enumerate::lengths_ref20(q).unwrap());
        for rec in &all {
            assert_eq!(rec.n % 2, 0, "odd length {} from {}", rec.n, rec.source);
            assert!(rec.n >= 2 && rec.n <= q + 1, "length {} out of range", rec.n);
        }
    }
}

#[test]
fn example_lengths_are_new_relative_to_baselines() {
    // the worked-example lengths come from the coset-union families and
    // not from the REF20 baseline
    let q = 149u64 * 149;
    let ref20: BTreeSet<u64> =
        enumerate::lengths_ref20(q).unwrap().iter().map(|x| x.n).collect();
    for n in [4944u64, 6172, 7504, 8180, 9018] {
        assert!(!ref20.contains(&n), "{n} is already a baseline length");
    }
}

#[test]
fn export_roundtrip_through_json() {
    let ctx = Arc::new(FieldCtx::new(5, 1).unwrap());
    let params = TheoremParams::new(ctx, Family::T31, 4, 8, 1, 2).unwrap();
    for variant in [Variant::N, Variant::NPlusOne, Variant::NPlusTwo] {
        let case = construct::validate(&params).unwrap();
        if !case.allows(variant) {
            continue;
        }
        let code = construct::construct_code(&params, variant).unwrap();
        let json = serde_json::to_string_pretty(&code.export()).unwrap();
        let back = GrsCode::from_export(&serde_json::from_str(&json).unwrap()).unwrap();
        assert_eq!(back.points(), code.points());
        assert_eq!(back.multipliers(), code.multipliers());
        assert_eq!(back.dimension(), code.dimension());
        assert_eq!(back.is_extended(), code.is_extended());
        assert!(verify::is_self_dual(&back).pass);
        // identical serialization both ways
        assert_eq!(json, serde_json::to_string_pretty(&back.export()).unwrap());
    }
}
