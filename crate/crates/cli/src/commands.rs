//! One function per subcommand.

use std::path::Path;

use clifford_invariants::codes::{
    enumerate_self_dual, enumerate_self_dual_prime, hamming8, named_code, parse_code_file, AnyCode, Shadow,
};
use clifford_invariants::enumerators::{cwe as cwe_binary, cwe_prime, h_m_explicit, hm_term_count_formula, hwe, shadow_identities};
use clifford_invariants::exact::{base_p_var_name, binary_var_name, RatPoly};
use clifford_invariants::groups::{molien_series, Group, GroupSpec, DEFAULT_MAX_ORDER};
use clifford_invariants::invariants::{
    harmonic_degree8, parabolic_basis, poly_hash, verify_averaging_lemma, verify_averaging_theorem, verify_runge as runge,
    verify_runge_odd_prime, verify_triangular as triangular, Variant,
};
use clifford_invariants::lattices::{
    balanced_lattice, barnes_wall, design_test, even_unimodular_rescaling, verify_automorphism_membership,
    verify_complex_automorphism_membership, verify_span_maximal_order, verify_tensor_decomposition, PointMode,
};
use clifford_invariants::selftest::{run_selftest, SelftestOptions};
use serde::Serialize;
use serde_json::{json, Value};

use crate::output::{CliError, Outcome};
use crate::{CodeArg, GroupArgs, KindArg, PointArg, VariantArg};

type Res = Result<Outcome, CliError>;

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

fn spec(a: &GroupArgs) -> GroupSpec {
    match a.kind {
        KindArg::Real => GroupSpec::real(a.m),
        KindArg::Complex => GroupSpec::complex(a.m),
        KindArg::Extraspecial => GroupSpec::extraspecial(a.m),
        KindArg::OddPrime => GroupSpec::odd_prime(a.p, a.m),
        KindArg::ExtraspecialP => GroupSpec::extraspecial_p(a.p, a.m),
    }
}

fn build(a: &GroupArgs) -> Result<Group, CliError> {
    Ok(Group::with_budget(spec(a), a.max_order.unwrap_or(DEFAULT_MAX_ORDER))?)
}

fn describe(a: &GroupArgs, g: &Group) -> Value {
    json!({
        "spec": to_value(&spec(a)),
        "dimension": g.dim(),
        "generators": g.generators().len(),
        "order": g.order().to_string(),
    })
}

pub fn group_order(a: &GroupArgs) -> Res {
    let g = build(a)?;
    Ok(Outcome::new("group order", true, describe(a, &g)))
}

pub fn group_closure(a: &GroupArgs, list: bool) -> Res {
    let g = build(a)?;
    let mut v = describe(a, &g);
    v["subgroup_order"] = json!(g.subgroup().len());
    v["transversal_size"] = json!(g.transversal().len());
    if list {
        let ring = g.ring();
        let elements: Vec<Value> = g.elements()?.iter().map(|e| e.to_cyclotomic_matrix(ring).to_json()).collect();
        v["elements"] = Value::Array(elements);
    }
    Ok(Outcome::new("group closure", true, v))
}

pub fn group_molien(a: &GroupArgs, order: usize) -> Res {
    let g = build(a)?;
    let s = molien_series(&g, order)?;
    let coeffs: Vec<Value> = s
        .coeffs()
        .iter()
        .map(|c| c.to_i64().map(Value::from).unwrap_or_else(|| Value::String(c.to_string())))
        .collect();
    let text = coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ");
    let mut v = describe(a, &g);
    v["molien"] = Value::Array(coeffs);
    Ok(Outcome::new("group molien", true, v).with_text(format!("{text}\n")))
}

pub fn codes_enumerate(length: usize, doubly_even: bool, p: u8) -> Res {
    let classes: Vec<Value> = if p == 2 {
        enumerate_self_dual(length, doubly_even)?
            .iter()
            .map(|c| json!({"code": c.representative.to_json(), "weight_distribution": c.weight_distribution}))
            .collect()
    } else {
        if doubly_even {
            return Err(CliError::Usage("--doubly-even applies to binary codes".into()));
        }
        enumerate_self_dual_prime(p, length)?
            .iter()
            .map(|c| {
                json!({
                    "code": c.class.representative.to_json(),
                    "weight_distribution": c.class.weight_distribution,
                    "with_ones": c.with_ones.as_ref().map(|w| w.to_json()),
                })
            })
            .collect()
    };
    let v = json!({"p": p, "length": length, "doubly_even": doubly_even, "classes": classes.len(), "codes": classes});
    Ok(Outcome::new("codes enumerate", true, v))
}

fn resolve(arg: &CodeArg) -> Result<AnyCode, CliError> {
    let path = Path::new(&arg.code);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Internal(format!("{}: {e}", path.display())))?;
        return Ok(parse_code_file(&text, arg.field)?);
    }
    named_code(&arg.code).map_err(|_| CliError::UnknownCode(arg.code.clone()))
}

fn code_json(code: &AnyCode) -> Value {
    match code {
        AnyCode::Binary(c) => c.to_json(),
        AnyCode::Prime(c) => c.to_json(),
    }
}

fn poly_json(p: &RatPoly, names: impl Fn(usize) -> String) -> Value {
    json!({"polynomial": p.render_with(names), "sha256": poly_hash(p), "terms": p.num_terms()})
}

pub fn cwe(arg: &CodeArg, genus: usize) -> Res {
    let code = resolve(arg)?;
    let (poly, names): (RatPoly, Box<dyn Fn(usize) -> String>) = match &code {
        AnyCode::Binary(c) => (cwe_binary(c, genus)?, Box::new(binary_var_name(genus))),
        AnyCode::Prime(c) => (cwe_prime(c, genus)?, Box::new(base_p_var_name(c.p() as usize, genus))),
    };
    let v = json!({"code": code_json(&code), "genus": genus, "cwe": poly_json(&poly, names)});
    Ok(Outcome::new("cwe", true, v))
}

pub fn hm(genus: usize) -> Res {
    let h = h_m_explicit(genus)?;
    let equals_cwe = h.poly == cwe_binary(&hamming8(), genus)?;
    let expected_terms = 1u128 << (4 * genus);
    let formula = hm_term_count_formula(genus);
    let ok = equals_cwe && h.weighted_terms == expected_terms && formula == expected_terms;
    let v = json!({
        "genus": genus,
        "h_m": poly_json(&h.poly, binary_var_name(genus)),
        "equals_cwe_h8": equals_cwe,
        "weighted_terms": h.weighted_terms.to_string(),
        "term_count_formula": formula.to_string(),
    });
    Ok(Outcome::new("hm", ok, v))
}

pub fn shadow(arg: &CodeArg) -> Res {
    let AnyCode::Binary(code) = resolve(arg)? else {
        return Err(CliError::Usage("shadows are defined for binary codes".into()));
    };
    let s = Shadow::new(&code)?;
    let ids = shadow_identities(&code)?;
    let v = json!({
        "code": code.to_json(),
        "offset": s.offset_string(),
        "hamming_enumerator": poly_json(&hwe(&code)?, |i| ["x", "y"][i].to_string()),
        "shadow_enumerator": poly_json(&s.enumerator()?, |i| ["x", "y"][i].to_string()),
        "identities": to_value(&ids),
    });
    Ok(Outcome::new("shadow", ids.all(), v))
}

pub fn verify_runge(length: usize, genus: usize, p: Option<u8>, samples: usize, seed: u64) -> Res {
    let r = match p {
        None | Some(2) => runge(length, genus)?,
        Some(p) => verify_runge_odd_prime(p, length, genus, samples, seed)?,
    };
    Ok(Outcome::new("verify runge", r.ok(), to_value(&r)))
}

pub fn verify_lemma(arg: &CodeArg, genus: usize) -> Res {
    let AnyCode::Binary(code) = resolve(arg)? else {
        return Err(CliError::Usage("the averaging lemma is stated for binary codes".into()));
    };
    let r = verify_averaging_lemma(&code, genus)?;
    Ok(Outcome::new("verify averaging-lemma", r.equal, to_value(&r)))
}

pub fn verify_theorem(arg: &CodeArg, genus: usize, variant: VariantArg) -> Res {
    let code = resolve(arg)?;
    let variant = match variant {
        VariantArg::Real => Variant::Real,
        VariantArg::Complex => Variant::Complex,
        VariantArg::OddPrime => Variant::OddPrime,
    };
    let r = verify_averaging_theorem(&code, genus, variant)?;
    Ok(Outcome::new("verify averaging-theorem", r.equal, to_value(&r)))
}

pub fn verify_parabolic(length: usize, genus: usize) -> Res {
    let r = parabolic_basis(length, genus)?;
    Ok(Outcome::new("verify parabolic-basis", r.ok(), to_value(&r)))
}

pub fn verify_triangular(length: usize, genus: usize) -> Res {
    let r = triangular(length, genus)?;
    Ok(Outcome::new("verify triangular", r.ok(), to_value(&r)))
}

pub fn verify_harmonic(genus: usize) -> Res {
    let r = harmonic_degree8(genus)?;
    let mut v = to_value(&r);
    if let Some(p) = &r.poly {
        v["harmonic_invariant"] = poly_json(p, binary_var_name(genus));
    }
    Ok(Outcome::new("verify harmonic8", r.ok(), v))
}

pub fn verify_tensor(m: usize, perturb: bool) -> Res {
    let holds = verify_tensor_decomposition(m, perturb)?;
    Ok(Outcome::new("verify tensor", holds, json!({"m": m, "perturbed": perturb, "hnf_equal": holds})))
}

pub fn verify_automorphism(m: usize, complex: bool) -> Res {
    let r = if complex { verify_complex_automorphism_membership(m)? } else { verify_automorphism_membership(m)? };
    Ok(Outcome::new("verify automorphism", r.ok(), to_value(&r)))
}

pub fn verify_span(m: u32, extraspecial: bool) -> Res {
    let spec = if extraspecial { GroupSpec::extraspecial(m) } else { GroupSpec::real(m) };
    let r = verify_span_maximal_order(&Group::new(spec)?)?;
    Ok(Outcome::new("verify span-order", r.maximal, to_value(&r)))
}

pub fn lattice_build(m: usize, primed: bool, balanced: bool) -> Res {
    let l = if balanced { balanced_lattice(m)? } else { barnes_wall(m, primed)? };
    let mut v = l.to_json();
    if !balanced {
        v["even_unimodular_rescaling"] = to_value(&even_unimodular_rescaling(&l)?);
    }
    let text = format!("det: {}\ngram:\n{}", l.det, l.gram_table());
    Ok(Outcome::new("lattice build", true, v).with_text(text))
}

pub fn design(m: usize, max_degree: usize, point: PointArg, coords: Vec<f64>, seed: u64) -> Res {
    if point != PointArg::Explicit && !coords.is_empty() {
        return Err(CliError::Usage("--coords needs --point explicit".into()));
    }
    let mode = match point {
        PointArg::MinimalVector => PointMode::MinimalVector,
        PointArg::RandomSphere => PointMode::RandomSphere { seed },
        PointArg::CommonZero => PointMode::CommonZero { seed },
        PointArg::Explicit => PointMode::Explicit(coords),
    };
    let r = design_test(m, mode, max_degree)?;
    Ok(Outcome::new("design-test", true, to_value(&r)))
}

pub fn selftest(only: Vec<String>, seed: u64) -> Res {
    let results = run_selftest(&SelftestOptions { seed }, &only);
    if results.is_empty() {
        return Err(CliError::Usage(format!("no criteria match {only:?}")));
    }
    let ok = results.iter().all(|r| r.passed || r.optional);
    let text = results.iter().map(|r| r.line()).collect::<Vec<_>>().join("\n");
    let passed = results.iter().filter(|r| r.passed).count();
    let v = json!({"passed": passed, "total": results.len(), "criteria": to_value(&results)});
    Ok(Outcome::new("selftest", ok, v).with_text(format!("{text}\n{passed}/{} criteria passed\n", results.len())))
}
