//! JSON formats for frames and algebras.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::algebras::{Algebra, AlgebraKind, FiniteAlgebra, FiniteMha, FiniteMs4Algebra, Table};
use crate::error::{Error, Result};
use crate::frames::{Category, FiniteFrame, Frame, MipcFrame, Ms4Frame};
use crate::relation::{PointSet, Relation};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum Closure {
    #[serde(rename = "reflexive-transitive")]
    ReflexiveTransitive,
    #[default]
    #[serde(rename = "none")]
    None,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FrameFile {
    pub kind: Category,
    pub points: Vec<String>,
    #[serde(default)]
    pub r_edges: Vec<[String; 2]>,
    #[serde(default)]
    pub r_closure: Closure,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub e_classes: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q_edges: Option<Vec<[String; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q_closure: Option<Closure>,
}

fn index_of(points: &[String], name: &str) -> Result<usize> {
    points
        .iter()
        .position(|p| p == name)
        .ok_or_else(|| Error::Malformed(format!("unknown point `{name}`")))
}

fn relation_from_edges(points: &[String], edges: &[[String; 2]], closure: Closure) -> Result<Relation> {
    let mut pairs = Vec::with_capacity(edges.len());
    for [x, y] in edges {
        pairs.push((index_of(points, x)?, index_of(points, y)?));
    }
    let rel = Relation::from_pairs(points.len(), pairs);
    Ok(match closure {
        Closure::ReflexiveTransitive => rel.reflexive_transitive_closure(),
        Closure::None => rel,
    })
}

/// Edges whose reflexive-transitive closure gives back `rel`: the covering
/// pairs when they suffice, otherwise every non-loop pair.
fn edges_for(points: &[String], rel: &Relation) -> (Vec<[String; 2]>, Closure) {
    let name = |i: usize| points[i].clone();
    let closed = rel.is_reflexive() && rel.is_transitive();
    let all: Vec<(usize, usize)> = rel.pairs().filter(|(x, y)| !closed || x != y).collect();
    let pick = if closed {
        let covers: Vec<(usize, usize)> = all
            .iter()
            .copied()
            .filter(|&(x, y)| !rel.image(x).iter().any(|z| z != x && z != y && rel.holds(z, y)))
            .collect();
        let back = Relation::from_pairs(rel.size(), covers.iter().copied()).reflexive_transitive_closure();
        if &back == rel {
            covers
        } else {
            all
        }
    } else {
        all
    };
    let closure = if closed {
        Closure::ReflexiveTransitive
    } else {
        Closure::None
    };
    (pick.into_iter().map(|(x, y)| [name(x), name(y)]).collect(), closure)
}

impl FrameFile {
    pub fn to_frame(&self) -> Result<Frame> {
        let points = &self.points;
        let r = relation_from_edges(points, &self.r_edges, self.r_closure)?;
        match self.kind {
            Category::Ms4 => {
                if self.q_edges.is_some() || self.q_closure.is_some() {
                    return Err(Error::Malformed("an ms4 frame takes e_classes, not q_edges".into()));
                }
                let mut classes = Vec::new();
                let mut covered = PointSet::EMPTY;
                for class in self.e_classes.iter().flatten() {
                    let mut set = PointSet::EMPTY;
                    for p in class {
                        let i = index_of(points, p)?;
                        if covered.contains(i) {
                            return Err(Error::Malformed(format!("point `{p}` in two E-classes")));
                        }
                        covered = covered.with(i);
                        set = set.with(i);
                    }
                    classes.push(set);
                }
                let e = Relation::from_classes(points.len(), &classes);
                Ok(Frame::Ms4(Ms4Frame::new(points.clone(), r, e)?))
            }
            Category::Mipc => {
                if self.e_classes.is_some() {
                    return Err(Error::Malformed("a mipc frame takes q_edges, not e_classes".into()));
                }
                let q = relation_from_edges(
                    points,
                    self.q_edges.as_deref().unwrap_or_default(),
                    self.q_closure.unwrap_or_default(),
                )?;
                Ok(Frame::Mipc(MipcFrame::new(points.clone(), r, q)?))
            }
        }
    }

    pub fn from_ms4(frame: &Ms4Frame) -> Self {
        let (r_edges, r_closure) = edges_for(frame.points(), frame.r());
        let classes = frame
            .e()
            .classes()
            .into_iter()
            .map(|c| c.iter().map(|i| frame.name(i).to_string()).collect())
            .collect();
        FrameFile {
            kind: Category::Ms4,
            points: frame.points().to_vec(),
            r_edges,
            r_closure,
            e_classes: Some(classes),
            q_edges: None,
            q_closure: None,
        }
    }

    pub fn from_mipc(frame: &MipcFrame) -> Self {
        let (r_edges, r_closure) = edges_for(frame.points(), frame.r());
        let (q_edges, q_closure) = edges_for(frame.points(), frame.side());
        FrameFile {
            kind: Category::Mipc,
            points: frame.points().to_vec(),
            r_edges,
            r_closure,
            e_classes: None,
            q_edges: Some(q_edges),
            q_closure: Some(q_closure),
        }
    }

    pub fn from_frame(frame: &Frame) -> Self {
        match frame {
            Frame::Ms4(g) => Self::from_ms4(g),
            Frame::Mipc(f) => Self::from_mipc(f),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub kind: AlgebraKind,
    pub n: usize,
    pub meet: Vec<Vec<usize>>,
    pub join: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub imp: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub neg: Option<Vec<usize>>,
    #[serde(default, rename = "box", skip_serializing_if = "Option::is_none")]
    pub boxed: Option<Vec<usize>>,
    pub forall: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exists: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

fn required<T>(field: Option<T>, name: &str, kind: AlgebraKind) -> Result<T> {
    field.ok_or_else(|| Error::Malformed(format!("{} algebra needs `{name}`", kind.name())))
}

impl AlgebraFile {
    pub fn to_algebra(&self) -> Result<Algebra> {
        if self.meet.len() != self.n {
            return Err(Error::Malformed(format!(
                "n is {} but the meet table has {} rows",
                self.n,
                self.meet.len()
            )));
        }
        let meet = Table::from_rows(&self.meet, "meet")?;
        let join = Table::from_rows(&self.join, "join")?;
        let kind = self.kind;
        match kind {
            AlgebraKind::Mha => {
                if self.neg.is_some() || self.boxed.is_some() {
                    return Err(Error::Malformed(
                        "mha algebra takes imp and exists, not neg or box".into(),
                    ));
                }
                let imp = Table::from_rows(&required(self.imp.clone(), "imp", kind)?, "imp")?;
                let exists = required(self.exists.clone(), "exists", kind)?;
                Ok(Algebra::Mha(FiniteMha::new(
                    meet,
                    join,
                    imp,
                    self.forall.clone(),
                    exists,
                    self.labels.clone(),
                )?))
            }
            AlgebraKind::Ms4 => {
                if self.imp.is_some() || self.exists.is_some() {
                    return Err(Error::Malformed(
                        "ms4 algebra takes neg and box, not imp or exists".into(),
                    ));
                }
                let neg = required(self.neg.clone(), "neg", kind)?;
                let boxed = required(self.boxed.clone(), "box", kind)?;
                Ok(Algebra::Ms4(FiniteMs4Algebra::new(
                    meet,
                    join,
                    neg,
                    boxed,
                    self.forall.clone(),
                    self.labels.clone(),
                )?))
            }
        }
    }

    pub fn from_mha(a: &FiniteMha) -> Self {
        AlgebraFile {
            kind: AlgebraKind::Mha,
            n: a.size(),
            meet: a.meet_table().rows(),
            join: a.join_table().rows(),
            imp: Some(a.imp_table().rows()),
            neg: None,
            boxed: None,
            forall: a.forall_vec().to_vec(),
            exists: Some(a.exists_vec().to_vec()),
            labels: a.labels().map(<[String]>::to_vec),
        }
    }

    pub fn from_ms4(b: &FiniteMs4Algebra) -> Self {
        AlgebraFile {
            kind: AlgebraKind::Ms4,
            n: b.size(),
            meet: b.meet_table().rows(),
            join: b.join_table().rows(),
            imp: None,
            neg: Some(b.neg_vec().to_vec()),
            boxed: Some(b.box_vec().to_vec()),
            forall: b.forall_vec().to_vec(),
            exists: None,
            labels: b.labels().map(<[String]>::to_vec),
        }
    }

    pub fn from_algebra(a: &Algebra) -> Self {
        match a {
            Algebra::Mha(a) => Self::from_mha(a),
            Algebra::Ms4(b) => Self::from_ms4(b),
        }
    }
}

/// Contents of a JSON file: a frame (has `points`) or an algebra (has `n`).
#[derive(Clone, Debug)]
pub enum Document {
    Frame(Frame),
    Algebra(Algebra),
}

pub fn parse_document(text: &str) -> Result<Document> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    if value.get("points").is_some() {
        let file: FrameFile = serde_json::from_value(value)?;
        Ok(Document::Frame(file.to_frame()?))
    } else if value.get("n").is_some() {
        let file: AlgebraFile = serde_json::from_value(value)?;
        Ok(Document::Algebra(file.to_algebra()?))
    } else {
        Err(Error::Malformed(
            "expected a frame (with `points`) or an algebra (with `n`)".into(),
        ))
    }
}

pub fn read_document(path: &Path) -> Result<Document> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_document(&text)
}
