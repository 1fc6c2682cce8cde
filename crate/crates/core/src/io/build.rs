use std::collections::BTreeMap;

use crate::exactlin::{Field, Subspace};
use crate::graded::{GradedAlgebra, Window};
use crate::instances::{
    boundary_path_groupoid, build_cohn, build_corner_skew, build_crossed_product, build_lpa, BaseRing,
    CornerSkewSpec, CrossedProductSpec, Graph, LinearMap,
};
use crate::realization::RealizationData;
use crate::steinberg::{steinberg_realization_data, Arrow, FiniteGroupoid, HTriple, InverseComparison};

use super::document::{list, Document, Section};
use super::{DocKind, IoError};

/// Field and degree window applied to every construction.
#[derive(Clone, Copy, Debug)]
pub struct Settings {
    pub field: Field,
    pub window: Window,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            field: Field::Rational,
            window: Window::new(-4, 4, 8),
        }
    }
}

fn semantic(message: impl Into<String>) -> IoError {
    IoError::Semantic(message.into())
}

/// `[graph] vertices`, then one `edge = vertex` line per edge in `[range]` and `[source]`.
pub fn graph_from(doc: &Document) -> Result<Graph, IoError> {
    let vertices: Vec<String> = list(doc.require("graph")?.require("vertices")?)
        .into_iter()
        .map(String::from)
        .collect();
    let range = doc.require("range")?;
    let source = doc.require("source")?;
    let mut edges = Vec::new();
    for (e, r) in &range.entries {
        let s = source
            .get(e)
            .ok_or_else(|| semantic(format!("edge {e} has a range but no source")))?;
        edges.push((e.clone(), r.clone(), s.to_string()));
    }
    if let Some((e, _)) = source.entries.iter().find(|(e, _)| range.get(e).is_none()) {
        return Err(semantic(format!("edge {e} has a source but no range")));
    }
    Ok(Graph::from_names(vertices, edges)?)
}

pub fn graph_sections(g: &Graph) -> Vec<Section> {
    let mut range = Section::new("range");
    let mut source = Section::new("source");
    for e in g.edges() {
        range = range.with(e.name.clone(), g.vertices()[e.range].clone());
        source = source.with(e.name.clone(), g.vertices()[e.source].clone());
    }
    vec![Section::new("graph").with("vertices", g.vertices().join("; ")), range, source]
}

pub fn graph_document(g: &Graph) -> Document {
    let mut d = Document::new(DocKind::Graph);
    d.sections = graph_sections(g);
    d
}

/// Explicit `[arrows]`, `[composition]` and `[cocycle]` maps, pair `[classes]`,
/// or a graph whose boundary-path groupoid is taken.
pub fn groupoid_from(doc: &Document) -> Result<FiniteGroupoid, IoError> {
    if let Some(arrows) = doc.section("arrows") {
        return explicit_groupoid(doc, arrows);
    }
    if let Some(classes) = doc.section("classes") {
        let mut out = Vec::new();
        for (name, members) in &classes.entries {
            let class = list(members)
                .into_iter()
                .map(|m| {
                    let (point, weight) = m
                        .split_once(':')
                        .ok_or_else(|| semantic(format!("class {name}: expected point:weight, found {m}")))?;
                    let w = weight
                        .trim()
                        .parse::<i64>()
                        .map_err(|_| semantic(format!("class {name}: bad weight {weight}")))?;
                    Ok((point.trim().to_string(), w))
                })
                .collect::<Result<Vec<_>, IoError>>()?;
            out.push(class);
        }
        return Ok(FiniteGroupoid::pair_classes(out)?);
    }
    if doc.section("graph").is_some() {
        return Ok(boundary_path_groupoid(&graph_from(doc)?)?);
    }
    Err(semantic("no [arrows], [classes] or [graph] section"))
}

fn explicit_groupoid(doc: &Document, arrows: &Section) -> Result<FiniteGroupoid, IoError> {
    let index: BTreeMap<&str, usize> = arrows.entries.iter().enumerate().map(|(k, (n, _))| (n.as_str(), k)).collect();
    let find = |name: &str| {
        index
            .get(name)
            .copied()
            .ok_or_else(|| semantic(format!("unknown arrow {name}")))
    };
    let cocycle = doc.require("cocycle")?;
    let mut out = Vec::new();
    for (name, value) in &arrows.entries {
        let parts = list(value);
        let [r, s, inv] = parts[..] else {
            return Err(semantic(format!("arrow {name}: expected `range; source; inverse`")));
        };
        let degree = cocycle
            .require(name)?
            .parse::<i64>()
            .map_err(|_| semantic(format!("arrow {name}: cocycle value is not an integer")))?;
        out.push(Arrow {
            name: name.clone(),
            range: find(r)?,
            source: find(s)?,
            inverse: find(inv)?,
            degree,
        });
    }
    let mut products = BTreeMap::new();
    for (pair, value) in &doc.require("composition")?.entries {
        let (a, b) = pair
            .split_once(" * ")
            .ok_or_else(|| semantic(format!("composition key `{pair}` is not `left * right`")))?;
        products.insert((find(a.trim())?, find(b.trim())?), find(value)?);
    }
    Ok(FiniteGroupoid::new(out, &products)?)
}

pub fn groupoid_sections(g: &FiniteGroupoid) -> Vec<Section> {
    let mut arrows = Section::new("arrows");
    let mut cocycle = Section::new("cocycle");
    let mut composition = Section::new("composition");
    for (k, a) in g.arrows().iter().enumerate() {
        arrows = arrows.with(
            a.name.clone(),
            format!("{}; {}; {}", g.name(a.range), g.name(a.source), g.name(a.inverse)),
        );
        cocycle = cocycle.with(a.name.clone(), a.degree.to_string());
        for b in 0..g.len() {
            if let Some(c) = g.compose(k, b) {
                composition = composition.with(format!("{} * {}", a.name, g.name(b)), g.name(c));
            }
        }
    }
    vec![arrows, composition, cocycle]
}

pub fn groupoid_document(g: &FiniteGroupoid) -> Document {
    let mut d = Document::new(DocKind::Groupoid);
    d.sections = groupoid_sections(g);
    d
}

/// `scalars`, `diagonal N` or `matrices N`.
pub fn base_ring_from(text: &str, field: Field) -> Result<BaseRing, IoError> {
    let mut words = text.split_whitespace();
    let size = |w: Option<&str>| {
        w.and_then(|n| n.parse::<usize>().ok())
            .filter(|n| *n > 0)
            .ok_or_else(|| semantic(format!("base `{text}` needs a positive size")))
    };
    match words.next() {
        Some("scalars") => Ok(BaseRing::scalars(field)),
        Some("diagonal") => Ok(BaseRing::diagonal(field, size(words.next())?)),
        Some("matrices") => Ok(BaseRing::matrices(field, size(words.next())?)),
        _ => Err(semantic(format!("unknown base ring `{text}`"))),
    }
}

fn linear_map(base: &BaseRing, images: &str) -> Result<LinearMap, IoError> {
    let images = list(images)
        .into_iter()
        .map(|x| base.parse_element(x))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(LinearMap::new(images))
}

/// `[crossed-product] base` and `phi`, the images of the base labels.
pub fn crossed_product_from(doc: &Document, settings: Settings) -> Result<CrossedProductSpec, IoError> {
    let s = doc.require("crossed-product")?;
    let base = base_ring_from(s.require("base")?, settings.field)?;
    let phi = linear_map(&base, s.require("phi")?)?;
    Ok(CrossedProductSpec {
        base,
        phi,
        window: settings.window,
    })
}

/// `[corner-skew] base`, the idempotent `p` and `alpha`, the images of the base labels.
pub fn corner_skew_from(doc: &Document, settings: Settings) -> Result<CornerSkewSpec, IoError> {
    let s = doc.require("corner-skew")?;
    let base = base_ring_from(s.require("base")?, settings.field)?;
    let p = base.parse_element(s.require("p")?)?;
    let alpha = linear_map(&base, s.require("alpha")?)?;
    Ok(CornerSkewSpec {
        base,
        p,
        alpha,
        window: settings.window,
    })
}

/// `[htriple] h0`, `h1` and `hm1`, each a `;`-separated list of arrow names.
pub fn htriple_from(doc: &Document, g: &FiniteGroupoid) -> Result<HTriple, IoError> {
    let s = doc.require("htriple")?;
    let h0 = list(s.require("h0")?);
    let h1 = list(s.require("h1")?);
    let hm1 = list(s.require("hm1")?);
    Ok(HTriple::from_names(g, &h0, &h1, &hm1)?)
}

/// A built instance together with its realization data.
#[derive(Clone, Debug)]
pub struct Instance {
    pub label: String,
    pub algebra: GradedAlgebra,
    pub data: RealizationData,
    /// Set for groupoid instances: how `H₋₁` compares with `H₁⁻¹`.
    pub inverses: Option<InverseComparison>,
}

/// Builds the instance named by `[job] instance`, or the document's own kind.
pub fn instance_from(doc: &Document, settings: Settings) -> Result<Instance, IoError> {
    let kind = match doc.kind {
        DocKind::RealizationJob => doc.require("job")?.require("instance")?.to_string(),
        DocKind::Graph => "lpa".into(),
        other => other.as_str().to_string(),
    };
    let (label, data, inverses) = match kind.as_str() {
        "lpa" | "cohn" => {
            let g = graph_from(doc)?;
            let built = if kind == "lpa" {
                build_lpa(&g, settings.field, settings.window)?
            } else {
                build_cohn(&g, settings.field, settings.window)?
            };
            (built.algebra().name().to_string(), built.realization_data(), None)
        }
        "crossed-product" => {
            let cp = build_crossed_product(&crossed_product_from(doc, settings)?)?;
            (cp.algebra().name().to_string(), cp.realization_data(), None)
        }
        "corner-skew" => {
            let cs = build_corner_skew(&corner_skew_from(doc, settings)?)?;
            (cs.algebra().name().to_string(), cs.realization_data(), None)
        }
        "steinberg" | "htriple" => {
            let g = groupoid_from(doc)?;
            let h = htriple_from(doc, &g)?;
            let (data, cmp) = steinberg_realization_data(&g, &h, settings.field)?;
            (data.a.name().to_string(), data, Some(cmp))
        }
        other => return Err(semantic(format!("unknown instance `{other}`"))),
    };
    let data = match doc.section("subspaces") {
        Some(s) => override_subspaces(data, s)?,
        None => data,
    };
    Ok(Instance {
        label,
        algebra: data.a.clone(),
        data,
        inverses,
    })
}

/// Replaces `r`, `i` or `j` with spans of `;`-separated element expressions.
fn override_subspaces(mut data: RealizationData, s: &Section) -> Result<RealizationData, IoError> {
    let a = data.a.clone();
    let span = |text: &str| -> Result<Subspace, IoError> {
        let elems = list(text)
            .into_iter()
            .map(|x| a.parse_element(x))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Subspace::span(a.field(), &elems).map_err(crate::graded::GradedError::from)?)
    };
    if let Some(r) = s.get("r") {
        data.r = span(r)?;
    }
    if let Some(i) = s.get("i") {
        data.i = span(i)?;
    }
    if let Some(j) = s.get("j") {
        data.j = span(j)?;
    }
    Ok(data)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::InstanceError;

    #[test]
    fn graph_document_round_trips() {
        let g = Graph::e_star();
        let doc = graph_document(&g);
        let back = Document::parse(&doc.serialize()).unwrap();
        assert_eq!(graph_from(&back).unwrap(), g);
    }

    #[test]
    fn unknown_vertex_is_semantic() {
        let doc = Document::parse("kind = graph\n[graph]\nvertices = u\n[range]\ne = u\n[source]\ne = z\n").unwrap();
        assert!(matches!(
            graph_from(&doc),
            Err(IoError::Instance(InstanceError::UnknownVertex { .. }))
        ));
    }

    #[test]
    fn explicit_groupoid_round_trips() {
        let g = boundary_path_groupoid(&Graph::e_star()).unwrap();
        let doc = groupoid_document(&g);
        let back = groupoid_from(&Document::parse(&doc.serialize()).unwrap()).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn base_ring_names() {
        assert_eq!(base_ring_from("diagonal 3", Field::Rational).unwrap().dim(), 3);
        assert_eq!(base_ring_from("matrices 2", Field::Rational).unwrap().dim(), 4);
        assert!(base_ring_from("diagonal", Field::Rational).is_err());
    }
}
