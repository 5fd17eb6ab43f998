//! Report types survive a JSON round trip and render sensibly as text.

use serde::de::DeserializeOwned;
use serde::Serialize;
use treedist::parse_edge_list;
use treedist_cli::commands::{self, AnalyzeOptions, ColorOptions, CountOptions};
use treedist_cli::report::{ColorEntry, SelftestReport, VerifyReport};
use treedist_cli::Input;

fn round_trip<T: Serialize + DeserializeOwned + PartialEq + std::fmt::Debug>(value: &T) {
    let json = serde_json::to_string(value).unwrap();
    assert_eq!(&serde_json::from_str::<T>(&json).unwrap(), value);
}

fn input(text: &str) -> Input {
    Input {
        source: Some("mem".into()),
        parsed: treedist::Parsed::Unrooted(parse_edge_list(text).unwrap()),
    }
}

#[test]
fn reports_round_trip() {
    let star = input("hub a\nhub b\nhub c\nhub d\n");
    let analysis = commands::analyze(
        &star,
        AnalyzeOptions {
            witness: true,
            counts: Some(4),
        },
    )
    .unwrap();
    round_trip(&analysis);
    round_trip(&commands::certify(&star).unwrap());
    let count = commands::count(
        &star,
        &CountOptions {
            k: Some(40),
            proper: true,
            lists: None,
            class_cap: 10,
        },
    )
    .unwrap();
    round_trip(&count);
    let coloring = commands::color(
        &star,
        &ColorOptions {
            k: None,
            proper: false,
            lists: None,
            index: Some(3u32.into()),
            class_cap: 10,
        },
    )
    .unwrap();
    round_trip(&coloring);
    round_trip(&VerifyReport {
        distinguishing: true,
        proper: None,
        passed: true,
        elapsed_us: 1,
    });
    round_trip(&SelftestReport {
        criteria: vec![],
        passed: true,
        elapsed_us: 0,
    });
    round_trip(&ColorEntry {
        label: "x".into(),
        color: 0,
    });
}

#[test]
fn large_counts_stay_exact() {
    let star = input("hub a\nhub b\nhub c\n");
    let r = commands::count(
        &star,
        &CountOptions {
            k: Some(1_000_000),
            proper: false,
            lists: None,
            class_cap: 1,
        },
    )
    .unwrap();
    // binom(10^6, 3) * 10^6
    let expected = num_bigint::BigUint::from(1_000_000u64 * 999_999 * 999_998 / 6) * 1_000_000u32;
    assert_eq!(r.count, expected.to_string());
    let json = serde_json::to_value(&r).unwrap();
    assert!(json["count"].is_string());
}

#[test]
fn text_shows_the_extra_color_as_a_star() {
    let r = treedist_cli::report::ColoringReport {
        k: None,
        proper: true,
        index: None,
        colors: vec![ColorEntry {
            label: "v".into(),
            color: 0,
        }],
        elapsed_us: 0,
    };
    assert_eq!(r.text(), "v *\n");
}
