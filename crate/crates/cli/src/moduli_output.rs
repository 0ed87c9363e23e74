//! Rendering of ring presentations.

use std::fmt::Write as _;

use rootloci::moduli::{Grading, Relation, RingPresentation, Space};
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum SpaceChoice {
    /// Equivariant cohomology of the semistable locus.
    Ss,
    /// Cohomology of the semistable quotient.
    SsQuotient,
    /// Cohomology of the stable quotient (even d).
    Stable,
    /// Cohomology of the link of the semistable point (even d >= 6).
    Link,
}

impl From<SpaceChoice> for Space {
    fn from(s: SpaceChoice) -> Space {
        match s {
            SpaceChoice::Ss => Space::SsEquivariant,
            SpaceChoice::SsQuotient => Space::SsQuotient,
            SpaceChoice::Stable => Space::StableQuotient,
            SpaceChoice::Link => Space::Link,
        }
    }
}

fn grading_label(g: Grading) -> &'static str {
    match g {
        Grading::HalfDegree => "t counts cohomological degree 2",
        Grading::Cohomological => "t counts cohomological degree 1",
    }
}

fn relation_json(r: &Relation) -> Value {
    match r {
        Relation::Sym(s) => json!({"kind": "symmetric", "poly": s.to_string()}),
        Relation::Root(b) => json!({"kind": "chern-roots", "poly": b.to_string()}),
        Relation::Power {
            generator,
            exponent,
        } => {
            json!({"kind": "power", "poly": format!("{generator}^{exponent}")})
        }
    }
}

fn nonzero_degrees(p: &RingPresentation) -> Vec<usize> {
    p.series
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, &b)| b > 0)
        .map(|(k, _)| k)
        .collect()
}

pub fn to_text(p: &RingPresentation) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "d: {}", p.d);
    let _ = writeln!(out, "space: {}", p.space);
    let _ = writeln!(out, "grading: {}", grading_label(p.grading));
    let gens: Vec<String> = p
        .generators
        .iter()
        .map(|g| format!("{} (degree {})", g.name, g.degree))
        .collect();
    let _ = writeln!(out, "generators: {}", gens.join(", "));
    let _ = writeln!(out, "relations:");
    for r in &p.relations {
        match r {
            Relation::Root(_) => {
                let _ = writeln!(out, "  {r}  [in Chern roots, contracted]");
            }
            _ => {
                let _ = writeln!(out, "  {r}");
            }
        }
    }
    if p.augmented {
        let _ = writeln!(out, "structure: Q<1> + c1*Q[c1,c2]/I");
    }
    let _ = writeln!(out, "series: {}", p.series);
    if p.space == Space::Link {
        let degs: Vec<String> = nonzero_degrees(p).iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "betti degrees: {}", degs.join(","));
    }
    let _ = writeln!(out, "closed form: {}", p.closed_form);
    let _ = writeln!(
        out,
        "series verified: {} (through degree {})",
        if p.series_verified { "yes" } else { "no" },
        p.series.bound()
    );
    out
}

pub fn to_json(p: &RingPresentation) -> String {
    let value = json!({
        "d": p.d,
        "space": p.space.label(),
        "grading": grading_label(p.grading),
        "generators": p.generators.iter().map(|g| json!({"name": g.name, "degree": g.degree})).collect::<Vec<_>>(),
        "relations": p.relations.iter().map(relation_json).collect::<Vec<_>>(),
        "augmented": p.augmented,
        "series": p.series.coeffs(),
        "closed_form": p.closed_form,
        "series_verified": p.series_verified,
    });
    value.to_string()
}
