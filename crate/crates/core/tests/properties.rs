use hamming::matrix::parity_check_interleaved;
use hamming::stream::{flip_stream_bit, stream_block};
use hamming::{
    compute_checking_number, decode, decode_stream, derive_params, encode, encode_stream,
    extract_data, inject, BitBlock, ChannelConfig, CodeParams, DecodeStatus, FrameHeader, NoiseRng,
};
use proptest::prelude::*;

fn params_and_data() -> impl Strategy<Value = (CodeParams, BitBlock)> {
    (1usize..=80).prop_flat_map(|m| {
        let params = derive_params(m).unwrap();
        proptest::collection::vec(any::<bool>(), m).prop_map(move |bits| (params, bits.into()))
    })
}

fn params_and_pair() -> impl Strategy<Value = (CodeParams, BitBlock, BitBlock)> {
    (1usize..=80).prop_flat_map(|m| {
        let params = derive_params(m).unwrap();
        (
            proptest::collection::vec(any::<bool>(), m),
            proptest::collection::vec(any::<bool>(), m),
        )
            .prop_map(move |(a, b)| (params, a.into(), b.into()))
    })
}

proptest! {
    #[test]
    fn round_trip_is_clean((params, data) in params_and_data()) {
        let cw = encode(&data, &params).unwrap();
        prop_assert_eq!(cw.len(), params.n());
        prop_assert!(compute_checking_number(&cw, &params).unwrap().is_zero());
        prop_assert_eq!(&extract_data(&cw, &params).unwrap(), &data);
        let out = decode(&cw, &params).unwrap();
        prop_assert_eq!(out.status, DecodeStatus::Clean);
        prop_assert_eq!(out.corrected_position, None);
        prop_assert_eq!(out.data, data);
    }

    #[test]
    fn single_flip_is_located_and_repaired(
        (params, data) in params_and_data(),
        pick in any::<prop::sample::Index>(),
    ) {
        let pos = pick.index(params.n()) + 1;
        let mut word = encode(&data, &params).unwrap();
        word.flip(pos).unwrap();
        prop_assert_eq!(compute_checking_number(&word, &params).unwrap().value(), pos);
        let out = decode(&word, &params).unwrap();
        prop_assert_eq!(out.status, DecodeStatus::Corrected);
        prop_assert_eq!(out.corrected_position, Some(pos));
        prop_assert_eq!(out.data, data);
    }

    #[test]
    fn double_flip_is_never_silent(
        (params, data) in params_and_data(),
        a in any::<prop::sample::Index>(),
        b in any::<prop::sample::Index>(),
    ) {
        let (p, q) = (a.index(params.n()) + 1, b.index(params.n()) + 1);
        prop_assume!(p != q);
        let mut word = encode(&data, &params).unwrap();
        word.flip(p).unwrap();
        word.flip(q).unwrap();
        prop_assert!(!compute_checking_number(&word, &params).unwrap().is_zero());
    }

    #[test]
    fn encoding_is_linear((params, a, b) in params_and_pair()) {
        let lhs = encode(&(&a ^ &b), &params).unwrap();
        let rhs = &encode(&a, &params).unwrap() ^ &encode(&b, &params).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn matrix_syndrome_equals_checking_number(
        m in 1usize..=60,
        seed in any::<u64>(),
    ) {
        let params = derive_params(m).unwrap();
        let h = parity_check_interleaved(&params);
        let mut rng = NoiseRng::new(seed);
        let word: BitBlock = (0..params.n()).map(|_| rng.bernoulli(0.5)).collect();
        let syndrome: usize = h
            .mul_vec(&word)
            .unwrap()
            .iter()
            .enumerate()
            .map(|(i, &bit)| (bit as usize) << i)
            .sum();
        prop_assert_eq!(syndrome, compute_checking_number(&word, &params).unwrap().value());
    }

    #[test]
    fn bsc_is_reproducible(seed in any::<u64>(), p_e in 0.0f64..=1.0, len in 1usize..200) {
        let block = BitBlock::zeros(len);
        let cfg = ChannelConfig::bsc(p_e, seed).unwrap();
        let first = inject(&block, &cfg, &mut cfg.rng()).unwrap();
        let second = inject(&block, &cfg, &mut cfg.rng()).unwrap();
        prop_assert_eq!(first, second);
    }

    #[test]
    fn stream_round_trip(
        m in 1usize..=40,
        payload in proptest::collection::vec(any::<u8>(), 0..300),
    ) {
        let params = derive_params(m).unwrap();
        let coded = encode_stream(&payload, &params).unwrap();
        let (back, report) = decode_stream(&coded).unwrap();
        prop_assert_eq!(back, payload);
        prop_assert_eq!(report.corrected(), 0);
    }

    #[test]
    fn one_flip_per_block_never_changes_the_payload(
        m in 1usize..=40,
        payload in proptest::collection::vec(any::<u8>(), 1..200),
        seed in any::<u64>(),
    ) {
        let params = derive_params(m).unwrap();
        let mut coded = encode_stream(&payload, &params).unwrap();
        let blocks = FrameHeader::parse(&coded).unwrap().block_count() as usize;
        let mut rng = NoiseRng::new(seed);
        let mut flipped = 0;
        for b in 0..blocks {
            // leave some blocks untouched
            if rng.bernoulli(0.8) {
                let pos = rng.below(params.n() as u64) as usize + 1;
                flip_stream_bit(&mut coded, b, pos).unwrap();
                flipped += 1;
            }
        }
        let (back, report) = decode_stream(&coded).unwrap();
        prop_assert_eq!(back, payload);
        prop_assert_eq!(report.corrected(), flipped);
    }

    #[test]
    fn truncated_streams_are_rejected(
        m in 1usize..=20,
        payload in proptest::collection::vec(any::<u8>(), 1..64),
        cut in any::<prop::sample::Index>(),
    ) {
        let params = derive_params(m).unwrap();
        let coded = encode_stream(&payload, &params).unwrap();
        let keep = cut.index(coded.len());
        prop_assert!(decode_stream(&coded[..keep]).is_err());
    }
}

#[test]
fn golden_stream_for_b0() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data");
    let golden = std::fs::read(format!("{dir}/b0_m4.hmng")).unwrap();
    let payload = std::fs::read(format!("{dir}/b0.bin")).unwrap();
    let params = derive_params(4).unwrap();
    assert_eq!(encode_stream(&payload, &params).unwrap(), golden);
    assert_eq!(stream_block(&golden, 0).unwrap().to_string(), "0110011");
    assert_eq!(stream_block(&golden, 1).unwrap().to_string(), "0000000");
    assert_eq!(decode_stream(&golden).unwrap().0, payload);
}

#[test]
fn shortened_code_brute_force_correction() {
    // every valid explicit (m, k) with small n, including non-minimal k
    for k in 2..=5 {
        for m in 1..=30 {
            let Ok(params) = CodeParams::new(m, k) else {
                continue;
            };
            for value in 0..(1u64 << m).min(64) {
                let data = BitBlock::from_uint(value * 0x9E37_79B9 % (1u64 << m), m);
                let cw = encode(&data, &params).unwrap();
                for pos in 1..=params.n() {
                    let mut w = cw.clone();
                    w.flip(pos).unwrap();
                    let out = decode(&w, &params).unwrap();
                    assert_eq!(out.corrected_position, Some(pos), "{params} pos {pos}");
                    assert_eq!(out.data, data);
                }
            }
        }
    }
}
