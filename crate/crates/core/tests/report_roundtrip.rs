use casimir_shell::report::{
    parse_csv_records, parse_json_records, write_records, Format, OutputRecord,
};
use proptest::prelude::*;

fn finite() -> impl Strategy<Value = f64> {
    prop_oneof![
        -1e6f64..1e6,
        (-300i32..300, -9.99f64..9.99).prop_map(|(e, m)| m * 10f64.powi(e)),
        Just(0.0),
    ]
}

prop_compose! {
    fn record()(
        neumann in any::<bool>(),
        material in "[a-z]{0,8}",
        a_meters in finite(),
        omega_p in finite(),
        x_cutoff in finite(),
        sigma in finite(),
        force_coeff in finite(),
        si_force in proptest::option::of(finite()),
        m_used in 0u32..5000,
        converged in any::<bool>(),
        tail_estimate in finite(),
    ) -> OutputRecord {
        OutputRecord {
            bc: if neumann { "neumann" } else { "dirichlet" }.to_string(),
            material,
            a_meters,
            omega_p,
            x_cutoff,
            sigma,
            force_coeff,
            si_force,
            m_used,
            converged,
            tail_estimate,
        }
    }
}

fn emit(recs: &[OutputRecord], format: Format) -> String {
    String::from_utf8(write_records(Vec::new(), recs, format).unwrap()).unwrap()
}

proptest! {
    #[test]
    fn emitters_round_trip_exactly(recs in proptest::collection::vec(record(), 1..5)) {
        prop_assert_eq!(&parse_json_records(&emit(&recs, Format::Json)).unwrap(), &recs);
        prop_assert_eq!(&parse_json_records(&emit(&recs, Format::Jsonl)).unwrap(), &recs);
        prop_assert_eq!(&parse_csv_records(&emit(&recs, Format::Csv)).unwrap(), &recs);
    }
}
