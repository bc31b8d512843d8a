//! JSON formats for graphs and composition recipes.
//!
//! A graph is `{"n": 3, "edges": [[0,1],[1,2]]}`. A recipe is either an
//! explicit `{"components": [...], "attach": [...]}` or one of the named
//! shorthands `chain`, `rooted`, `corona`, `block`, `treeT`, `familyF`.
//! A bare graph is accepted wherever a recipe is.

use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::composer::{
    block_graph, build_family_f, build_tree_t, chain, corona, rooted_product_family, AttachStep,
    ChainLink, Composition,
};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            n: g.order(),
            edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
        }
    }
}

impl GraphJson {
    /// Validates edge by edge so the error names the offending entry.
    pub fn to_graph(&self, at: &str) -> Result<Graph> {
        let mut seen = std::collections::BTreeMap::new();
        for (i, &[u, v]) in self.edges.iter().enumerate() {
            let here = || format!("{at}edges[{i}] = [{u},{v}]");
            if u >= self.n || v >= self.n {
                return Err(Error::Parse(format!(
                    "{}: endpoint out of range for n = {}",
                    here(),
                    self.n
                )));
            }
            if u == v {
                return Err(Error::Parse(format!("{}: self-loop", here())));
            }
            if let Some(j) = seen.insert((u.min(v), u.max(v)), i) {
                return Err(Error::Parse(format!("{}: duplicates edges[{j}]", here())));
            }
        }
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|&[u, v]| (u, v)).collect();
        Graph::new(self.n, &edges)
    }
}

fn parse_value<T: for<'de> Deserialize<'de>>(v: &Value, at: &str) -> Result<T> {
    T::deserialize(v).map_err(|e| Error::Parse(format!("{at}: {e}")))
}

fn parse_graph_value(v: &Value, at: &str) -> Result<Graph> {
    let spec: GraphJson = parse_value(v, at)?;
    spec.to_graph(&format!("{at}."))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    parse_graph_value(&v, "graph")
}

pub fn graph_to_json(g: &Graph) -> String {
    serde_json::to_string(&GraphJson::from(g)).expect("graph JSON is always serializable")
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

pub fn load_graph(path: &Path) -> Result<Graph> {
    parse_graph(&read(path)?).map_err(|e| match e {
        Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
        other => other,
    })
}

/// One link of a chain shorthand.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LinkJson {
    graph: Value,
    entry: usize,
    exit: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RootedJson {
    g: Value,
    #[serde(default)]
    h: Option<Value>,
    #[serde(default)]
    root: Option<usize>,
    #[serde(default)]
    family: Option<Vec<RootedMember>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RootedMember {
    graph: Value,
    root: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CoronaJson {
    g: Value,
    #[serde(default)]
    h: Option<Value>,
    #[serde(default)]
    family: Option<Vec<Value>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BlockJson {
    sizes: Vec<usize>,
    attach: Vec<AttachJson>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AttachJson {
    host: usize,
    component: usize,
    vertex: usize,
}

impl From<AttachJson> for AttachStep {
    fn from(a: AttachJson) -> Self {
        AttachStep {
            host: a.host,
            component: a.component,
            vertex: a.vertex,
        }
    }
}

/// A parsed but not yet built recipe.
#[derive(Clone, Debug, PartialEq)]
pub enum Recipe {
    Graph(Graph),
    Explicit {
        components: Vec<Graph>,
        attach: Vec<AttachStep>,
    },
    Chain(Vec<ChainLink>),
    Rooted {
        g: Graph,
        rooted: Vec<(Graph, usize)>,
    },
    Corona {
        g: Graph,
        family: Vec<Graph>,
    },
    Block {
        sizes: Vec<usize>,
        attach: Vec<AttachStep>,
    },
    TreeT {
        a: usize,
        b: usize,
        n: usize,
    },
    FamilyF(usize),
}

/// What a recipe builds.
#[derive(Clone, Debug)]
pub enum Built {
    Graph(Graph),
    Composition(Composition),
}

impl Built {
    pub fn graph(&self) -> &Graph {
        match self {
            Built::Graph(g) => g,
            Built::Composition(c) => c.graph(),
        }
    }

    pub fn composition(&self) -> Option<&Composition> {
        match self {
            Built::Composition(c) => Some(c),
            Built::Graph(_) => None,
        }
    }
}

impl Recipe {
    pub fn build(&self) -> Result<Built> {
        Ok(match self {
            Recipe::Graph(g) => Built::Graph(g.clone()),
            Recipe::Explicit { components, attach } => {
                Built::Composition(Composition::from_steps(components.clone(), attach)?)
            }
            Recipe::Chain(links) => Built::Composition(chain(links)?),
            Recipe::Rooted { g, rooted } => Built::Composition(rooted_product_family(g, rooted)?),
            Recipe::Corona { g, family } => Built::Composition(corona(g, family)?),
            Recipe::Block { sizes, attach } => Built::Composition(block_graph(sizes, attach)?),
            Recipe::TreeT { a, b, n } => Built::Graph(build_tree_t(*a, *b, *n)?),
            Recipe::FamilyF(t) => Built::Graph(build_family_f(*t)?),
        })
    }
}

pub fn parse_recipe(text: &str) -> Result<Recipe> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    recipe_from_value(&v)
}

pub fn load_recipe(path: &Path) -> Result<Recipe> {
    parse_recipe(&read(path)?).map_err(|e| match e {
        Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
        other => other,
    })
}

fn graphs(values: &[Value], at: &str) -> Result<Vec<Graph>> {
    values
        .iter()
        .enumerate()
        .map(|(i, v)| parse_graph_value(v, &format!("{at}[{i}]")))
        .collect()
}

fn recipe_from_value(v: &Value) -> Result<Recipe> {
    let Some(obj) = v.as_object() else {
        return Err(Error::Parse("recipe must be a JSON object".into()));
    };
    if obj.contains_key("n") {
        return Ok(Recipe::Graph(parse_graph_value(v, "graph")?));
    }
    if obj.contains_key("components") {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Explicit {
            components: Vec<Value>,
            attach: Vec<AttachJson>,
        }
        let e: Explicit = parse_value(v, "recipe")?;
        return Ok(Recipe::Explicit {
            components: graphs(&e.components, "components")?,
            attach: e.attach.into_iter().map(Into::into).collect(),
        });
    }
    if obj.len() != 1 {
        return Err(Error::Parse(format!(
            "recipe must have exactly one of chain, rooted, corona, block, treeT, familyF; got keys {:?}",
            obj.keys().collect::<Vec<_>>()
        )));
    }
    let (key, body) = obj.iter().next().unwrap();
    match key.as_str() {
        "chain" => {
            let links: Vec<LinkJson> = parse_value(body, "chain")?;
            let links = links
                .into_iter()
                .enumerate()
                .map(|(i, l)| {
                    Ok(ChainLink {
                        graph: parse_graph_value(&l.graph, &format!("chain[{i}].graph"))?,
                        entry: l.entry,
                        exit: l.exit,
                    })
                })
                .collect::<Result<_>>()?;
            Ok(Recipe::Chain(links))
        }
        "rooted" => {
            let r: RootedJson = parse_value(body, "rooted")?;
            let g = parse_graph_value(&r.g, "rooted.g")?;
            let rooted = match (r.h, r.root, r.family) {
                (Some(h), Some(root), None) => {
                    let h = parse_graph_value(&h, "rooted.h")?;
                    vec![(h, root); g.order()]
                }
                (None, None, Some(family)) => family
                    .into_iter()
                    .enumerate()
                    .map(|(i, m)| {
                        Ok((
                            parse_graph_value(&m.graph, &format!("rooted.family[{i}].graph"))?,
                            m.root,
                        ))
                    })
                    .collect::<Result<_>>()?,
                _ => {
                    return Err(Error::Parse(
                        "rooted: give either h and root, or family".into(),
                    ))
                }
            };
            Ok(Recipe::Rooted { g, rooted })
        }
        "corona" => {
            let c: CoronaJson = parse_value(body, "corona")?;
            let g = parse_graph_value(&c.g, "corona.g")?;
            let family = match (c.h, c.family) {
                (Some(h), None) => vec![parse_graph_value(&h, "corona.h")?; g.order()],
                (None, Some(family)) => graphs(&family, "corona.family")?,
                _ => return Err(Error::Parse("corona: give either h or family".into())),
            };
            Ok(Recipe::Corona { g, family })
        }
        "block" => {
            let b: BlockJson = parse_value(body, "block")?;
            Ok(Recipe::Block {
                sizes: b.sizes,
                attach: b.attach.into_iter().map(Into::into).collect(),
            })
        }
        "treeT" => {
            let [a, b, n]: [usize; 3] = parse_value(body, "treeT")?;
            Ok(Recipe::TreeT { a, b, n })
        }
        "familyF" => Ok(Recipe::FamilyF(parse_value(body, "familyF")?)),
        other => Err(Error::Parse(format!("unknown recipe kind {other:?}"))),
    }
}
