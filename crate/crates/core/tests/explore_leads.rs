// Exploration of completed lead sets; will become frozen catalog tests.
use gdaha_core::catalog::{sample_torus, specialize_preset, DiagramType, PresetKey, SamplerConfig};
use gdaha_core::exactnum::{rat, Cyclo};

#[test]
fn explore_e7_leads() {
    let tp = sample_torus(
        DiagramType::E7,
        Cyclo::from_rat_val(rat(2, 1)),
        1,
        &SamplerConfig::default(),
    );
    let sp = specialize_preset(PresetKey::Efficient(DiagramType::E7), &tp).unwrap();
    let t0 = std::time::Instant::now();
    let rs = sp.complete(14).unwrap();
    println!("E7 completeness {:?} in {:?}", rs.completeness, t0.elapsed());
    println!("E7 leads: {:?}", rs.lead_strings());
}

#[test]
fn explore_e8d_leads() {
    let tp = sample_torus(
        DiagramType::E8,
        Cyclo::from_rat_val(rat(2, 1)),
        1,
        &SamplerConfig::default(),
    );
    let sp = specialize_preset(PresetKey::EfficientE8D, &tp).unwrap();
    let t0 = std::time::Instant::now();
    let rs = sp.complete(14).unwrap();
    println!("E8d completeness {:?} in {:?}", rs.completeness, t0.elapsed());
    println!("E8d leads ({}):", rs.rules.len());
    for l in rs.lead_strings() {
        println!("  {}", l);
    }
}

#[test]
fn explore_d4z_leads() {
    let tp = sample_torus(
        DiagramType::D4,
        Cyclo::from_rat_val(rat(2, 1)),
        1,
        &SamplerConfig::default(),
    );
    let sp = specialize_preset(PresetKey::EfficientD4Z, &tp).unwrap();
    let t0 = std::time::Instant::now();
    let rs = sp.complete(14).unwrap();
    println!("D4z completeness {:?} in {:?}", rs.completeness, t0.elapsed());
    println!("D4z leads: {:?}", rs.lead_strings());
}

#[test]
fn explore_d4_efficient_leads() {
    let tp = sample_torus(
        DiagramType::D4,
        Cyclo::from_rat_val(rat(2, 1)),
        1,
        &SamplerConfig::default(),
    );
    let sp = specialize_preset(PresetKey::Efficient(DiagramType::D4), &tp).unwrap();
    let t0 = std::time::Instant::now();
    let rs = sp.complete(10).unwrap();
    println!("D4 bcd completeness {:?} in {:?}", rs.completeness, t0.elapsed());
    println!("D4 bcd leads ({}): {:?}", rs.rules.len(), rs.lead_strings());
}
