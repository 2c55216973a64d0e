//! TOML input documents and their validation into engine objects.

use std::collections::BTreeMap;

use rankin_core::reps::{Catalog, CuspidalLine, CuspidalSymbol, GenericRep, InertialTag, Segment, Structure, TagMap};
use rankin_core::scalars::parse_scalar;
use rankin_core::{PrimeContext, Scalar, World};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub context: ContextSpec,
    #[serde(default)]
    pub lines: Vec<LineSpec>,
    #[serde(default)]
    pub cuspidals: Vec<CuspidalSpec>,
    #[serde(default)]
    pub reps: Vec<RepSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ContextSpec {
    pub ell: u64,
    pub q: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LineSpec {
    pub label: String,
    pub n: u64,
    pub f: u64,
    pub dual_label: String,
    /// ℓ-adic scalar encoding of `δ`; defaults to `1`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dual_base_twist: Option<String>,
    /// `identity` or `negation` (default).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tag_map: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CuspidalSpec {
    pub name: String,
    /// `mod-l` or `l-adic`.
    pub world: String,
    pub line: String,
    pub twist: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tag: Option<String>,
    /// Absent for supercuspidals.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub structure: Option<SteinbergSpec>,
}

/// `St_r(base)` with `base` naming a mod-ℓ supercuspidal declared earlier.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SteinbergSpec {
    pub r: u32,
    pub base: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepSpec {
    pub name: String,
    pub segments: Vec<SegmentSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SegmentSpec {
    pub cuspidal: String,
    pub a: i64,
    pub b: i64,
}

/// A validated document.
#[derive(Clone, Debug)]
pub struct Model {
    pub document: InputDocument,
    pub catalog: Catalog,
    pub cuspidals: BTreeMap<String, CuspidalSymbol>,
    pub reps: BTreeMap<String, GenericRep>,
}

impl Model {
    pub fn ctx(&self) -> &PrimeContext {
        self.catalog.ctx()
    }

    pub fn rep(&self, name: &str) -> Result<&GenericRep, CliError> {
        self.reps.get(name).ok_or_else(|| CliError::Input(format!("unknown rep {name:?}")))
    }
}

/// Parses the TOML text and validates every declaration in order.
pub fn parse_input(text: &str) -> Result<Model, CliError> {
    let document: InputDocument = toml::from_str(text).map_err(|e| CliError::Input(e.message().to_string()))?;
    validate(document)
}

/// Canonical TOML text of a document.
pub fn render(document: &InputDocument) -> String {
    toml::to_string(document).expect("documents serialize")
}

fn at<E: std::fmt::Display>(what: String) -> impl FnOnce(E) -> CliError {
    move |e| CliError::Input(format!("{what}: {e}"))
}

pub fn validate(document: InputDocument) -> Result<Model, CliError> {
    let ctx = PrimeContext::new(document.context.ell, document.context.q).map_err(at("context".into()))?;
    let mut lines = Vec::new();
    for l in &document.lines {
        let delta = parse_scalar(l.dual_base_twist.as_deref().unwrap_or("1"), World::LAdic, &ctx)
            .map_err(at(format!("line {:?} dual_base_twist", l.label)))?;
        let tag_map = TagMap::from_name(l.tag_map.as_deref().unwrap_or("negation")).map_err(at(format!("line {:?}", l.label)))?;
        lines.push(CuspidalLine {
            label: l.label.clone(),
            n: l.n,
            f: l.f,
            dual_label: l.dual_label.clone(),
            dual_twist: delta.as_adic().expect("l-adic scalar"),
            tag_map,
        });
    }
    let catalog = Catalog::new(ctx, lines).map_err(CliError::Engine)?;

    let mut cuspidals: BTreeMap<String, CuspidalSymbol> = BTreeMap::new();
    for c in &document.cuspidals {
        let what = || format!("cuspidal {:?}", c.name);
        if cuspidals.contains_key(&c.name) {
            return Err(CliError::Input(format!("{} declared twice", what())));
        }
        let world = World::from_name(&c.world).map_err(at(what()))?;
        let twist: Scalar = parse_scalar(&c.twist, world, &ctx).map_err(at(what()))?;
        let tag = c
            .tag
            .as_deref()
            .map(InertialTag::parse)
            .transpose()
            .map_err(at(what()))?
            .unwrap_or_else(InertialTag::zero);
        let structure = match &c.structure {
            None => Structure::Supercuspidal,
            Some(s) => {
                let base = cuspidals
                    .get(&s.base)
                    .ok_or_else(|| CliError::Input(format!("{}: unknown base cuspidal {:?}", what(), s.base)))?;
                Structure::NonSupercuspidal {
                    r: s.r,
                    base: Box::new(base.clone()),
                }
            }
        };
        let sym = CuspidalSymbol::new(&catalog, world, &c.line, twist, tag, structure).map_err(at(what()))?;
        cuspidals.insert(c.name.clone(), sym);
    }

    let mut reps = BTreeMap::new();
    for r in &document.reps {
        let what = || format!("rep {:?}", r.name);
        if reps.contains_key(&r.name) {
            return Err(CliError::Input(format!("{} declared twice", what())));
        }
        let mut segs = Vec::new();
        let mut world = None;
        for s in &r.segments {
            let rho = cuspidals
                .get(&s.cuspidal)
                .ok_or_else(|| CliError::Input(format!("{}: unknown cuspidal {:?}", what(), s.cuspidal)))?;
            segs.push(Segment::new(rho, s.a, s.b).map_err(at(what()))?);
            world.get_or_insert(rho.world());
        }
        let world = world.ok_or_else(|| CliError::Input(format!("{}: no segments", what())))?;
        reps.insert(r.name.clone(), GenericRep::new(world, segs).map_err(at(what()))?);
    }
    Ok(Model {
        document,
        catalog,
        cuspidals,
        reps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const MINIMAL: &str = r#"
[context]
ell = 7
q = 2

[[lines]]
label = "triv"
n = 1
f = 1
dual_label = "triv"
"#;

    #[test]
    fn minimal_document() {
        let m = parse_input(MINIMAL).unwrap();
        assert_eq!(m.catalog.lines().count(), 1);
        assert!(m.reps.is_empty());
        assert_eq!(parse_input(&render(&m.document)).unwrap().document, m.document);
    }

    #[test]
    fn non_generic_segment() {
        let text = format!(
            "{MINIMAL}\n[[cuspidals]]\nname = \"chi\"\nworld = \"mod-l\"\nline = \"triv\"\ntwist = \"1\"\n\n[[reps]]\nname = \"p\"\nsegments = [{{ cuspidal = \"chi\", a = 0, b = 2 }}]\n"
        );
        let err = parse_input(&text).unwrap_err().to_string();
        assert!(err.contains("segment not generic: k=3, e(ρ)=3"), "{err}");
    }

    #[test]
    fn dangling_dual_label() {
        let err = parse_input(&MINIMAL.replace("dual_label = \"triv\"", "dual_label = \"ghost\""))
            .unwrap_err()
            .to_string();
        assert!(err.contains("ghost"), "{err}");
    }

    #[test]
    fn world_mismatch_and_linked() {
        let base = format!(
            "{MINIMAL}\n[[cuspidals]]\nname = \"m\"\nworld = \"mod-l\"\nline = \"triv\"\ntwist = \"1\"\n\n[[cuspidals]]\nname = \"a\"\nworld = \"l-adic\"\nline = \"triv\"\ntwist = \"1\"\n"
        );
        let mixed =
            format!("{base}\n[[reps]]\nname = \"p\"\nsegments = [{{ cuspidal = \"m\", a = 0, b = 0 }}, {{ cuspidal = \"a\", a = 0, b = 0 }}]\n");
        assert!(parse_input(&mixed).unwrap_err().to_string().contains("world mismatch"));
        let linked =
            format!("{base}\n[[reps]]\nname = \"p\"\nsegments = [{{ cuspidal = \"a\", a = 0, b = 0 }}, {{ cuspidal = \"a\", a = 1, b = 1 }}]\n");
        assert!(parse_input(&linked).unwrap_err().to_string().contains("linked"));
        let unknown = MINIMAL.replace("label = \"triv\"", "label = \"x\"").replace("dual_label = \"x\"", "");
        assert!(parse_input(&unknown).is_err());
    }
}
