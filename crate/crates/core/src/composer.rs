//! Point-attaching: building a graph by repeatedly identifying a vertex of a
//! new connected graph with a vertex of the graph built so far.
//!
//! Composed labels are assigned in attach order. The seed keeps its labels;
//! every later component gets a contiguous block of fresh labels for all of
//! its vertices except the identified one, which takes the host's label.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metrics::{connected_distances, domination_number, isolated_after_removal};
use crate::resolver::{Limits, Resolver};

/// Identify `vertex` of component `component` with composed vertex `host`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AttachStep {
    pub host: usize,
    pub component: usize,
    pub vertex: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SubgraphClass {
    /// Exactly one attachment vertex.
    End,
    /// Two or more attachment vertices.
    Internal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AttachProfile {
    pub component: usize,
    /// `A(G_i)` in the component's own labels.
    pub attachment: Vec<usize>,
    pub class: SubgraphClass,
    pub satisfies_p1: bool,
    pub satisfies_p2: bool,
}

/// Composition in progress. Components are attached one at a time.
#[derive(Clone, Debug)]
pub struct CompositionBuilder {
    components: Vec<Graph>,
    images: Vec<Vec<usize>>,
    steps: Vec<AttachStep>,
    order: usize,
    edges: Vec<(usize, usize)>,
    attachments: BTreeSet<usize>,
}

fn require_component(g: &Graph) -> Result<()> {
    if g.order() < 2 {
        return Err(Error::Composition("components must have order >= 2".into()));
    }
    if !g.is_connected() {
        return Err(Error::Composition("components must be connected".into()));
    }
    Ok(())
}

impl CompositionBuilder {
    pub fn new(seed: Graph) -> Result<Self> {
        require_component(&seed)?;
        let order = seed.order();
        Ok(CompositionBuilder {
            images: vec![(0..order).collect()],
            edges: seed.edges().to_vec(),
            components: vec![seed],
            steps: Vec::new(),
            order,
            attachments: BTreeSet::new(),
        })
    }

    /// Current order of the composed graph.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Attaches `g` by identifying its vertex `vertex` with composed vertex
    /// `host`. Returns the new component's index.
    pub fn attach(&mut self, host: usize, g: Graph, vertex: usize) -> Result<usize> {
        require_component(&g)?;
        if host >= self.order {
            return Err(Error::VertexOutOfRange {
                vertex: host,
                order: self.order,
            });
        }
        g.check_vertex(vertex)?;
        let mut image = Vec::with_capacity(g.order());
        for u in g.vertices() {
            if u == vertex {
                image.push(host);
            } else {
                image.push(self.order);
                self.order += 1;
            }
        }
        self.edges
            .extend(g.edges().iter().map(|&(u, v)| (image[u], image[v])));
        let component = self.components.len();
        self.steps.push(AttachStep {
            host,
            component,
            vertex,
        });
        self.attachments.insert(host);
        self.components.push(g);
        self.images.push(image);
        Ok(component)
    }

    pub fn finalize(self) -> Result<Composition> {
        let k = self.components.len();
        if k < 2 {
            return Err(Error::Composition(
                "a composition needs at least two components".into(),
            ));
        }
        let total: usize = self.components.iter().map(Graph::order).sum();
        assert_eq!(self.order, total - self.steps.len());
        let graph = Graph::new(self.order, &self.edges)?;
        let mut c = Composition {
            components: self.components,
            images: self.images,
            steps: self.steps,
            graph,
            attachments: self.attachments.into_iter().collect(),
            profiles: Vec::new(),
        };
        c.profiles = (0..k).map(|i| c.build_profile(i)).collect::<Result<_>>()?;
        Ok(c)
    }
}

/// A finished point-attaching composition with its provenance.
#[derive(Clone, Debug)]
pub struct Composition {
    components: Vec<Graph>,
    images: Vec<Vec<usize>>,
    steps: Vec<AttachStep>,
    graph: Graph,
    attachments: Vec<usize>,
    profiles: Vec<AttachProfile>,
}

impl Composition {
    /// Builds from a component list and attach steps; component `0` is the
    /// seed and every other component is attached exactly once.
    pub fn from_steps(components: Vec<Graph>, steps: &[AttachStep]) -> Result<Self> {
        let k = components.len();
        if k == 0 {
            return Err(Error::Composition("no components".into()));
        }
        if steps.len() != k - 1 {
            return Err(Error::Composition(format!(
                "{} components need {} attach steps, got {}",
                k,
                k - 1,
                steps.len()
            )));
        }
        let mut slots: Vec<Option<Graph>> = components.into_iter().map(Some).collect();
        let mut builder = CompositionBuilder::new(slots[0].take().unwrap())?;
        for step in steps {
            if step.component == 0 || step.component >= k {
                return Err(Error::Composition(format!(
                    "attach step references component {} (valid: 1..{})",
                    step.component,
                    k - 1
                )));
            }
            let g = slots[step.component].take().ok_or_else(|| {
                Error::Composition(format!("component {} attached twice", step.component))
            })?;
            builder.attach(step.host, g, step.vertex)?;
        }
        builder.finalize()
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn components(&self) -> &[Graph] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Graph {
        &self.components[i]
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn steps(&self) -> &[AttachStep] {
        &self.steps
    }

    /// Composed label of vertex `u` of component `i`.
    pub fn image(&self, i: usize, u: usize) -> usize {
        self.images[i][u]
    }

    pub fn images(&self, i: usize) -> &[usize] {
        &self.images[i]
    }

    /// `A(G)` in composed labels.
    pub fn attachments(&self) -> &[usize] {
        &self.attachments
    }

    pub fn profiles(&self) -> &[AttachProfile] {
        &self.profiles
    }

    pub fn profile(&self, i: usize) -> &AttachProfile {
        &self.profiles[i]
    }

    /// `A(G_i)` in composed labels.
    pub fn attachment_images(&self, i: usize) -> Vec<usize> {
        self.profiles[i]
            .attachment
            .iter()
            .map(|&u| self.images[i][u])
            .collect()
    }

    fn build_profile(&self, i: usize) -> Result<AttachProfile> {
        let g = &self.components[i];
        let attachment: Vec<usize> = g
            .vertices()
            .filter(|&u| self.attachments.binary_search(&self.images[i][u]).is_ok())
            .collect();
        debug_assert!(!attachment.is_empty());
        let class = if attachment.len() == 1 {
            SubgraphClass::End
        } else {
            SubgraphClass::Internal
        };
        Ok(AttachProfile {
            component: i,
            satisfies_p1: satisfies_p1(g, &attachment)?,
            satisfies_p2: satisfies_p2(g, &attachment)?,
            attachment,
            class,
        })
    }

    pub fn end_components(&self) -> impl Iterator<Item = usize> + '_ {
        self.profiles
            .iter()
            .filter(|p| p.class == SubgraphClass::End)
            .map(|p| p.component)
    }

    /// `dim(G_i)`
    pub fn component_dim(&self, i: usize, limits: Limits) -> Result<usize> {
        Resolver::with_limits(&self.components[i], limits)?.dim()
    }

    /// `dim*(G_i)` with respect to `A(G_i)`.
    pub fn dim_star(&self, i: usize, limits: Limits) -> Result<usize> {
        Resolver::with_limits(&self.components[i], limits)?
            .attaching_dimension(&self.profiles[i].attachment)
            .map(|b| b.size)
    }

    /// `τ_i`
    pub fn tau(&self, i: usize, limits: Limits) -> Result<usize> {
        Resolver::with_limits(&self.components[i], limits)?.tau(&self.profiles[i].attachment)
    }
}

/// For every attachment vertex `a0` and non-attachment `z` there is an
/// attachment vertex `b` with `d(a0,b) >= d(z,b)`.
pub fn satisfies_p1(g: &Graph, a: &[usize]) -> Result<bool> {
    g.check_vertices(a)?;
    let d = connected_distances(g)?;
    let in_a: BTreeSet<usize> = a.iter().copied().collect();
    Ok(in_a.iter().all(|&a0| {
        g.vertices()
            .filter(|z| !in_a.contains(z))
            .all(|z| in_a.iter().any(|&b| d.get(a0, b) >= d.get(z, b)))
    }))
}

/// Exactly one attachment vertex, and the graph is not a path or that
/// vertex is not a leaf of it.
pub fn satisfies_p2(g: &Graph, a: &[usize]) -> Result<bool> {
    g.check_vertices(a)?;
    let distinct: BTreeSet<usize> = a.iter().copied().collect();
    if distinct.len() != 1 {
        return Ok(false);
    }
    let v = a[0];
    Ok(!g.is_path() || g.degree(v) != 1)
}

/// One link of a chain: enter at `entry`, leave at `exit`. The first link's
/// `entry` and the last link's `exit` are ignored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainLink {
    pub graph: Graph,
    pub entry: usize,
    pub exit: usize,
}

/// Chain `G_1 .. G_k` where the exit of `G_i` is identified with the entry of
/// `G_{i+1}`.
pub fn chain(links: &[ChainLink]) -> Result<Composition> {
    let Some((first, rest)) = links.split_first() else {
        return Err(Error::Composition("empty chain".into()));
    };
    let k = links.len();
    for (i, link) in links.iter().enumerate() {
        link.graph.check_vertex(link.entry)?;
        link.graph.check_vertex(link.exit)?;
        if i > 0 && i + 1 < k && link.entry == link.exit {
            return Err(Error::Composition(format!(
                "internal chain link {i} enters and leaves at the same vertex"
            )));
        }
    }
    let mut builder = CompositionBuilder::new(first.graph.clone())?;
    let mut exit = first.exit;
    for link in rest {
        let idx = builder.attach(exit, link.graph.clone(), link.entry)?;
        exit = builder.images[idx][link.exit];
    }
    builder.finalize()
}

/// Block graph from cliques `K_{sizes[i]}` glued by `glue`.
pub fn block_graph(sizes: &[usize], glue: &[AttachStep]) -> Result<Composition> {
    let components = sizes
        .iter()
        .map(|&r| {
            if r < 2 {
                Err(Error::Composition(format!("clique size {r} < 2")))
            } else {
                Graph::complete(r)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Composition::from_steps(components, glue)
}

/// `G(H)`: the root of `rooted[i]` is identified with vertex `i` of `g`.
pub fn rooted_product_family(g: &Graph, rooted: &[(Graph, usize)]) -> Result<Composition> {
    if rooted.len() != g.order() {
        return Err(Error::LengthMismatch {
            expected: g.order(),
            got: rooted.len(),
        });
    }
    let mut builder = CompositionBuilder::new(g.clone())?;
    for (i, (h, root)) in rooted.iter().enumerate() {
        builder.attach(i, h.clone(), *root)?;
    }
    builder.finalize()
}

/// `G ∘_v H`. Vertex `(u_i, b)` is `image(i + 1, b)`; see [`pair_label`].
pub fn rooted_product_uniform(g: &Graph, h: &Graph, root: usize) -> Result<Composition> {
    h.check_vertex(root)?;
    let rooted: Vec<_> = g.vertices().map(|_| (h.clone(), root)).collect();
    rooted_product_family(g, &rooted)
}

/// Composed label of `(u, b)` in a rooted product built by this module.
pub fn pair_label(product: &Composition, u: usize, b: usize) -> usize {
    product.image(u + 1, b)
}

/// `G ⊙ H`, built as the rooted product of `K_1 + H_i` rooted at the `K_1`
/// vertex.
pub fn corona(g: &Graph, family: &[Graph]) -> Result<Composition> {
    if family.len() != g.order() {
        return Err(Error::LengthMismatch {
            expected: g.order(),
            got: family.len(),
        });
    }
    let rooted: Vec<_> = family
        .iter()
        .map(|h| (Graph::join_with_k1(h), h.order()))
        .collect();
    rooted_product_family(g, &rooted)
}

pub fn corona_uniform(g: &Graph, h: &Graph) -> Result<Composition> {
    let family = vec![h.clone(); g.order()];
    corona(g, &family)
}

/// The tree `T(a, b, n)`: a star `K_{1,a}` (center `0`, leaves `1..=a`)
/// whose center is one end of a path `P'` of order `n - b + 1`, with one
/// pendant vertex on each of the `b - a - 1` degree-two vertices of `P'`
/// farthest from the star. Order `n`, `b` leaves, `b - a` exterior major
/// vertices.
pub fn build_tree_t(a: usize, b: usize, n: usize) -> Result<Graph> {
    if !(2 <= a && a < b && 2 * b <= a + n) {
        return Err(Error::InvalidParameters(format!(
            "T(a,b,n) needs 2 <= a < b <= (a+n)/2, got ({a},{b},{n})"
        )));
    }
    let mut edges: Vec<(usize, usize)> = (1..=a).map(|l| (0, l)).collect();
    // p_0 is the center; p_j (1 <= j <= n-b) gets label a + j
    let path_len = n - b;
    let p = |j: usize| if j == 0 { 0 } else { a + j };
    edges.extend((1..=path_len).map(|j| (p(j - 1), p(j))));
    let pendants = b - a - 1;
    let interior = path_len - 1; // degree-two vertices p_1..p_{n-b-1}
    let mut next = a + path_len + 1;
    for j in interior + 1 - pendants..=interior {
        edges.push((p(j), next));
        next += 1;
    }
    debug_assert_eq!(next, n);
    Graph::new(n, &edges)
}

/// Labels of the family `G_t`: `v = 0`, `x_i = i`, `y_i = t + i`.
pub fn build_family_f(t: usize) -> Result<Graph> {
    if t < 3 {
        return Err(Error::InvalidParameters(format!(
            "family F needs t >= 3, got {t}"
        )));
    }
    let mut edges: Vec<(usize, usize)> = (1..=t).map(|i| (0, i)).collect();
    for i in 1..=t {
        for j in 1..=t {
            if i != j {
                edges.push((i, t + j));
            }
        }
    }
    Graph::new(2 * t + 1, &edges)
}

/// The resolving set of `G ∘_v P` assembled from a metric basis of `G` with
/// the most isolated vertices and a dominating set of what remains.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CotaGenerator {
    /// Basis `S` of `g` maximizing `|I(S)|`.
    pub basis: Vec<usize>,
    /// `I(S)`, which has size `I(g)`.
    pub isolated: Vec<usize>,
    /// Minimum dominating set of `<V - (S ∪ I(S))>`, in `g` labels.
    pub dominating: Vec<usize>,
    /// `(S ∪ S') × {v'}` in product labels.
    pub generator: Vec<usize>,
    pub resolving: bool,
    /// `2 |generator| <= dim(g) + n - I(g)`.
    pub within_bound: bool,
}

/// Builds `g ∘_v P` with `P = P_{p_len}` rooted at a leaf and returns it
/// together with the generator.
pub fn cota_generator(
    g: &Graph,
    p_len: usize,
    limits: Limits,
) -> Result<(Composition, CotaGenerator)> {
    if p_len < 2 {
        return Err(Error::InvalidParameters(format!(
            "path order must be >= 2, got {p_len}"
        )));
    }
    let path = Graph::path(p_len)?;
    let product = rooted_product_uniform(g, &path, 0)?;
    let resolver = Resolver::with_limits(g, limits)?;
    let (basis, iso) = resolver.max_isolation_basis()?;
    let isolated = isolated_after_removal(g, &basis)?;
    debug_assert_eq!(isolated.len(), iso);
    let rest: Vec<usize> = g
        .vertices()
        .filter(|v| basis.binary_search(v).is_err() && isolated.binary_search(v).is_err())
        .collect();
    let dominating = match g.induced(&rest)? {
        Some(sub) => domination_number(&sub)?
            .1
            .into_iter()
            .map(|i| rest[i])
            .collect(),
        None => Vec::new(),
    };
    let mut generator: Vec<usize> = basis
        .iter()
        .chain(dominating.iter())
        .map(|&u| pair_label(&product, u, p_len - 1))
        .collect();
    generator.sort_unstable();
    let resolving = Resolver::with_limits(product.graph(), limits)?.is_resolving(&generator)?;
    let within_bound = 2 * generator.len() <= basis.len() + g.order() - iso;
    Ok((
        product,
        CotaGenerator {
            basis,
            isolated,
            dominating,
            generator,
            resolving,
            within_bound,
        },
    ))
}
