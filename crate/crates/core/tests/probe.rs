//! Random area-preserving deformations: stationary candidates admit no
//! first-order perimeter drop, a cap with the wrong contact angle does.

use isodens::density::Density;
use isodens::oracle::{perturbation_probe, sample_candidate, snell_violating_cap, CandidateSpec, ProbeConfig};

const SEGMENTS: usize = 2000;

#[test]
fn stationary_candidates_show_no_improvement() {
    let cfg = ProbeConfig::default();
    for (id, lambda, parameter) in [
        ("disk", 1.0, 3.0),
        ("strip:ii", 2.0, 8.0),
        ("line", 2.0, 0.0),
        ("ball:b", 2.0, 1.0),
        ("ball:C", 0.5, 0.7),
    ] {
        let spec = CandidateSpec::parse(id, Some(lambda), Some(parameter)).unwrap();
        let poly = sample_candidate(&spec, SEGMENTS).unwrap();
        let r = perturbation_probe(&poly, &spec.density().unwrap(), &cfg).unwrap();
        assert!(!r.improvement_found, "{id}: {r:?}");
        assert!(r.max_area_error < 1e-8, "{id}: {}", r.max_area_error);
    }
}

#[test]
fn refraction_violation_is_detected() {
    let lambda = 2.0;
    let poly = snell_violating_cap(lambda, 0.2, SEGMENTS).unwrap();
    let r = perturbation_probe(&poly, &Density::line(lambda).unwrap(), &ProbeConfig::default()).unwrap();
    assert!(r.improvement_found, "{r:?}");
}

#[test]
fn probe_is_deterministic() {
    let spec = CandidateSpec::parse("disk", None, None).unwrap();
    let poly = sample_candidate(&spec, 500).unwrap();
    let d = spec.density().unwrap();
    let cfg = ProbeConfig { trials: 16, ..ProbeConfig::default() };
    assert_eq!(perturbation_probe(&poly, &d, &cfg).unwrap(), perturbation_probe(&poly, &d, &cfg).unwrap());
}
