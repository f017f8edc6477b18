//! Text and JSON rendering for the non-report subcommands, plus the text form
//! of a verification report.

use std::fmt::Write;

use serde_json::{json, Value};

use pqder::derivation::{DerivationSpace, Eigenpair};
use pqder::linalg::{format_rational, Rational, Subspace};
use pqder::structure::{is_semiprime, BlockDecomposition, Nilradical};
use pqder::verify::{Status, VerificationReport};
use pqder::{Algebra, Element, LinearMap, Result};

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values always serialize");
    s.push('\n');
    s
}

fn strings(xs: &[Rational]) -> Vec<String> {
    xs.iter().map(format_rational).collect()
}

fn map_rows(d: &LinearMap) -> Vec<Vec<String>> {
    d.matrix()
        .row_vectors()
        .iter()
        .map(|r| strings(r))
        .collect()
}

fn vectors(s: &Subspace) -> Vec<Vec<String>> {
    s.basis().iter().map(|v| strings(v)).collect()
}

fn elements(a: &Algebra, s: &Subspace) -> Vec<String> {
    s.basis()
        .iter()
        .map(|v| a.format_element(&Element::new(v.clone())))
        .collect()
}

fn list(items: &[String]) -> String {
    if items.is_empty() {
        "{0}".into()
    } else {
        format!("span{{{}}}", items.join(", "))
    }
}

pub fn derive(a: &Algebra, space: &DerivationSpace, json: bool) -> String {
    if json {
        return pretty(&json!({
            "algebra": a.name(),
            "kind": space.kind.to_string(),
            "dim": space.dim(),
            "basis": space.basis.iter().map(map_rows).collect::<Vec<_>>(),
        }));
    }
    let mut out = format!("{} kind {}: dimension {}\n", a, space.kind, space.dim());
    for (i, d) in space.basis.iter().enumerate() {
        let _ = writeln!(out, "map {i}:");
        for j in 0..a.dim() {
            let image = a.format_element(&d.image_of_basis(j));
            let _ = writeln!(out, "  {} -> {}", a.basis_labels()[j], image);
        }
    }
    out
}

pub fn radical(a: &Algebra, rad: &Nilradical, json: bool) -> String {
    let space = rad.ideal.space();
    if json {
        return pretty(&json!({
            "algebra": a.name(),
            "dim": space.dim(),
            "basis": vectors(space),
            "nilpotency_exponent": rad.exponent,
        }));
    }
    format!(
        "{}\nradical: {} (dim {})\nnilpotency exponent: {}\n",
        a,
        list(&elements(a, space)),
        space.dim(),
        rad.exponent
    )
}

pub fn primitive(a: &Algebra, dec: &BlockDecomposition, json: bool) -> String {
    let s = &dec.semisimple.quotient;
    if json {
        let blocks: Vec<Value> = dec
            .blocks
            .iter()
            .map(|b| {
                json!({
                    "dim": b.dim,
                    "factor": strings(b.factor.coeffs()),
                    "idempotent": strings(b.idempotent.coords()),
                })
            })
            .collect();
        return pretty(&json!({
            "algebra": a.name(),
            "radical": vectors(dec.radical.space()),
            "semisimple_dim": s.dim(),
            "separating_element": dec.separating.as_ref().map(|z| strings(z.coords())),
            "minimal_polynomial": dec.minimal_polynomial.as_ref().map(|f| strings(f.coeffs())),
            "blocks": blocks,
            "primitive_ideals": dec.primitive_ideals.iter().map(|p| vectors(p.space())).collect::<Vec<_>>(),
        }));
    }
    let mut out = format!(
        "{}\nradical: {} (dim {})\nsemisimple quotient: dim {}\n",
        a,
        list(&elements(a, dec.radical.space())),
        dec.radical.dim(),
        s.dim()
    );
    if let (Some(z), Some(f)) = (&dec.separating, &dec.minimal_polynomial) {
        let _ = writeln!(
            out,
            "separating element: {}\nminimal polynomial: {}",
            s.format_element(z),
            f
        );
    }
    if dec.blocks.is_empty() {
        out.push_str("no primitive ideals\n");
    }
    for (i, (b, p)) in dec.blocks.iter().zip(&dec.primitive_ideals).enumerate() {
        let _ = writeln!(
            out,
            "block {i}: dim {}, factor {}, idempotent {}\n  primitive ideal (dim {}): {}",
            b.dim,
            b.factor,
            s.format_element(&b.idempotent),
            p.dim(),
            list(&elements(a, p.space()))
        );
    }
    out
}

pub fn eigen(
    a: &Algebra,
    space: &DerivationSpace,
    index: usize,
    pairs: &[Eigenpair],
    json: bool,
) -> String {
    if json {
        let pairs: Vec<Value> = pairs
            .iter()
            .map(|e| json!({"value": format_rational(&e.value), "space": vectors(&e.space)}))
            .collect();
        return pretty(&json!({
            "algebra": a.name(),
            "kind": space.kind.to_string(),
            "index": index,
            "map": map_rows(&space.basis[index]),
            "eigenpairs": pairs,
        }));
    }
    let mut out = format!("{} kind {} map {index}\n", a, space.kind);
    if pairs.is_empty() {
        out.push_str("no rational eigenvalues\n");
    }
    for e in pairs {
        let _ = writeln!(
            out,
            "eigenvalue {}: {} (dim {})",
            format_rational(&e.value),
            list(&elements(a, &e.space)),
            e.space.dim()
        );
    }
    out
}

pub fn show(a: &Algebra, json: bool) -> Result<String> {
    let unital = a.identity();
    let right = a.find_right_identity();
    let center = a.center().dim();
    let semiprime = is_semiprime(a)?;
    if json {
        return Ok(pretty(&json!({
            "name": a.name(),
            "dim": a.dim(),
            "basis": a.basis_labels(),
            "note": a.note(),
            "commutative": a.is_commutative(),
            "unital": unital.is_some(),
            "right_identity": right.is_some(),
            "center_dim": center,
            "semiprime": semiprime,
        })));
    }
    let mut out = format!("{}\nbasis: {}\n", a, a.basis_labels().join(", "));
    if let Some(note) = a.note() {
        let _ = writeln!(out, "note: {note}");
    }
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    let _ = writeln!(out, "commutative: {}", yes_no(a.is_commutative()));
    let _ = writeln!(
        out,
        "unital: {}",
        unital.map_or("no".to_string(), |e| format!(
            "yes, 1 = {}",
            a.format_element(&e)
        ))
    );
    let _ = writeln!(
        out,
        "right identity: {}",
        right.map_or("no".to_string(), |e| format!(
            "yes, {}",
            a.format_element(&e)
        ))
    );
    let _ = writeln!(
        out,
        "center dim: {center}\nsemiprime: {}",
        yes_no(semiprime)
    );
    Ok(out)
}

pub fn report_text(r: &VerificationReport) -> String {
    let o = &r.options;
    let mut out = format!(
        "pqder {} seed {} degree_cap {} retries {} nilpotency_cap {} leibniz_max_n {} samples {}\n",
        r.version,
        o.seed,
        o.degree_cap,
        o.retries,
        o.nilpotency_cap
            .map_or("dim+1".to_string(), |c| c.to_string()),
        o.leibniz_max_n,
        o.samples
    );
    for c in &r.results {
        let kind = c.kind.map_or("-".to_string(), |k| k.to_string());
        let status = match c.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped(_) => "SKIP",
        };
        let _ = writeln!(
            out,
            "{status} {} {} {}: {}",
            c.check, c.algebra, kind, c.details
        );
        if c.status == Status::Fail {
            if let Some(w) = &c.witness {
                let _ = writeln!(out, "    witness: {}", w.note);
                if let Some(x) = &w.element {
                    let _ = writeln!(out, "    element: [{}]", strings(x.coords()).join(", "));
                }
                if let Some(d) = &w.map {
                    let _ = write!(out, "    map:\n{}", indent(&d.matrix().to_string()));
                }
            }
        }
    }
    let t = r.totals;
    let _ = writeln!(
        out,
        "totals: pass {}, fail {}, skipped {}",
        t.pass, t.fail, t.skipped
    );
    out
}

fn indent(text: &str) -> String {
    text.lines().map(|l| format!("      {l}\n")).collect()
}
