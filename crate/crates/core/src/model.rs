//! Contexts (a universe plus a parameter space) and the soft sets defined over them.
//!
//! A [`SoftSet`] maps some parameters of its context to nonempty subsets of
//! the universe. Parameters outside the map are *undefined*, which is never
//! the same thing as mapping to the empty set: the normalizing constructor
//! drops empty images, the strict one rejects them.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::objects::{ObjectId, ObjectSet, ParamId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("duplicate identifier `{0}`")]
    DuplicateIdentifier(String),
    #[error("a nonempty parameter space requires a nonempty universe")]
    EmptyUniverse,
    #[error("identifiers must be nonempty strings")]
    BadIdentifier,
    #[error("unknown parameter `{0}`")]
    UnknownParameter(String),
    #[error("unknown object `{0}`")]
    UnknownObject(String),
    #[error("parameter `{0}` is listed more than once")]
    DuplicateParameter(String),
    #[error("parameter `{0}` has an empty image")]
    EmptyImage(String),
    #[error("soft sets are defined over different contexts")]
    ContextMismatch,
}

pub type Result<T, E = ModelError> = std::result::Result<T, E>;

/// The shared frame every soft set refers to: an ordered universe of objects
/// and an ordered parameter space. Declaration order is the canonical order.
#[derive(Clone)]
pub struct Context {
    objects: Vec<String>,
    parameters: Vec<String>,
    object_index: HashMap<String, ObjectId>,
    parameter_index: HashMap<String, ParamId>,
}

pub type ContextRef = Arc<Context>;

fn index_names(names: &[String]) -> Result<HashMap<String, usize>> {
    let mut index = HashMap::with_capacity(names.len());
    for (i, name) in names.iter().enumerate() {
        if name.is_empty() {
            return Err(ModelError::BadIdentifier);
        }
        if index.insert(name.clone(), i).is_some() {
            return Err(ModelError::DuplicateIdentifier(name.clone()));
        }
    }
    Ok(index)
}

impl Context {
    pub fn new<O, P>(objects: O, parameters: P) -> Result<Context>
    where
        O: IntoIterator,
        O::Item: Into<String>,
        P: IntoIterator,
        P::Item: Into<String>,
    {
        let objects: Vec<String> = objects.into_iter().map(Into::into).collect();
        let parameters: Vec<String> = parameters.into_iter().map(Into::into).collect();
        let object_index = index_names(&objects)?
            .into_iter()
            .map(|(k, v)| (k, ObjectId(v)))
            .collect();
        let parameter_index = index_names(&parameters)?
            .into_iter()
            .map(|(k, v)| (k, ParamId(v)))
            .collect();
        if objects.is_empty() && !parameters.is_empty() {
            return Err(ModelError::EmptyUniverse);
        }
        Ok(Context {
            objects,
            parameters,
            object_index,
            parameter_index,
        })
    }

    /// The context with no objects and no parameters.
    pub fn empty() -> Context {
        Context::new(Vec::<String>::new(), Vec::<String>::new()).expect("empty context is valid")
    }

    pub fn into_ref(self) -> ContextRef {
        Arc::new(self)
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn parameters(&self) -> &[String] {
        &self.parameters
    }

    pub fn universe_size(&self) -> usize {
        self.objects.len()
    }

    pub fn parameter_count(&self) -> usize {
        self.parameters.len()
    }

    pub fn object_id(&self, name: &str) -> Option<ObjectId> {
        self.object_index.get(name).copied()
    }

    pub fn parameter_id(&self, name: &str) -> Option<ParamId> {
        self.parameter_index.get(name).copied()
    }

    pub fn object_name(&self, id: ObjectId) -> &str {
        &self.objects[id.0]
    }

    pub fn parameter_name(&self, id: ParamId) -> &str {
        &self.parameters[id.0]
    }

    pub fn parameter_ids(&self) -> impl Iterator<Item = ParamId> {
        (0..self.parameters.len()).map(ParamId)
    }

    pub fn object_ids(&self) -> impl Iterator<Item = ObjectId> {
        (0..self.objects.len()).map(ObjectId)
    }

    /// The whole universe U as an object set.
    pub fn full_set(&self) -> ObjectSet {
        ObjectSet::full(self.objects.len())
    }

    pub fn empty_set(&self) -> ObjectSet {
        ObjectSet::empty(self.objects.len())
    }

    /// Resolves object names into a set; duplicates collapse.
    pub fn object_set<I>(&self, names: I) -> Result<ObjectSet>
    where
        I: IntoIterator,
        I::Item: AsRef<str>,
    {
        let mut set = self.empty_set();
        for name in names {
            let name = name.as_ref();
            let id = self
                .object_id(name)
                .ok_or_else(|| ModelError::UnknownObject(name.to_string()))?;
            set.insert(id);
        }
        Ok(set)
    }

    pub fn object_names<'a>(&'a self, set: &'a ObjectSet) -> impl Iterator<Item = &'a str> + 'a {
        set.iter().map(|id| self.object_name(id))
    }

    /// This context with one object removed from the universe.
    pub fn without_object(&self, id: ObjectId) -> Result<Context> {
        let objects = self
            .objects
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != id.0)
            .map(|(_, o)| o.clone());
        Context::new(objects, self.parameters.iter().cloned())
    }

    /// This context with one parameter removed from the parameter space.
    pub fn without_parameter(&self, id: ParamId) -> Result<Context> {
        let parameters = self
            .parameters
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != id.0)
            .map(|(_, p)| p.clone());
        Context::new(self.objects.iter().cloned(), parameters)
    }
}

impl PartialEq for Context {
    fn eq(&self, other: &Self) -> bool {
        self.objects == other.objects && self.parameters == other.parameters
    }
}

impl Eq for Context {}

impl fmt::Debug for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Context")
            .field("objects", &self.objects)
            .field("parameters", &self.parameters)
            .finish()
    }
}

/// Two contexts are interchangeable when they declare the same identifiers in
/// the same order.
pub fn same_context(a: &ContextRef, b: &ContextRef) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// A soft set `(F, A)`: a partial map from the context's parameters to
/// nonempty subsets of its universe.
#[derive(Clone)]
pub struct SoftSet {
    ctx: ContextRef,
    assignment: BTreeMap<ParamId, ObjectSet>,
}

impl SoftSet {
    /// Normalizing constructor. Pairs whose object list is empty are dropped,
    /// so the parameter ends up undefined.
    pub fn new<I, P, O>(ctx: &ContextRef, pairs: I) -> Result<SoftSet>
    where
        I: IntoIterator<Item = (P, O)>,
        P: AsRef<str>,
        O: IntoIterator,
        O::Item: AsRef<str>,
    {
        Self::build(ctx, pairs, false)
    }

    /// Like [`SoftSet::new`], but an empty image is an error.
    pub fn strict<I, P, O>(ctx: &ContextRef, pairs: I) -> Result<SoftSet>
    where
        I: IntoIterator<Item = (P, O)>,
        P: AsRef<str>,
        O: IntoIterator,
        O::Item: AsRef<str>,
    {
        Self::build(ctx, pairs, true)
    }

    fn build<I, P, O>(ctx: &ContextRef, pairs: I, strict: bool) -> Result<SoftSet>
    where
        I: IntoIterator<Item = (P, O)>,
        P: AsRef<str>,
        O: IntoIterator,
        O::Item: AsRef<str>,
    {
        let mut seen = HashSet::new();
        let mut assignment = BTreeMap::new();
        for (param, objects) in pairs {
            let param = param.as_ref();
            let id = ctx
                .parameter_id(param)
                .ok_or_else(|| ModelError::UnknownParameter(param.to_string()))?;
            if !seen.insert(id) {
                return Err(ModelError::DuplicateParameter(param.to_string()));
            }
            let image = ctx.object_set(objects)?;
            if image.is_empty() {
                if strict {
                    return Err(ModelError::EmptyImage(param.to_string()));
                }
                continue;
            }
            assignment.insert(id, image);
        }
        Ok(SoftSet {
            ctx: Arc::clone(ctx),
            assignment,
        })
    }

    /// Builds from resolved images, dropping empty ones.
    pub fn from_images<I>(ctx: &ContextRef, images: I) -> SoftSet
    where
        I: IntoIterator<Item = (ParamId, ObjectSet)>,
    {
        let assignment = images
            .into_iter()
            .inspect(|(p, _)| assert!(p.0 < ctx.parameter_count(), "parameter index out of range"))
            .filter(|(_, image)| !image.is_empty())
            .collect();
        SoftSet {
            ctx: Arc::clone(ctx),
            assignment,
        }
    }

    /// The empty soft set `(∅, ∅)`.
    pub fn empty(ctx: &ContextRef) -> SoftSet {
        SoftSet {
            ctx: Arc::clone(ctx),
            assignment: BTreeMap::new(),
        }
    }

    /// The universal soft set `(U, E)`.
    pub fn universal(ctx: &ContextRef) -> SoftSet {
        let full = ctx.full_set();
        SoftSet {
            ctx: Arc::clone(ctx),
            assignment: ctx.parameter_ids().map(|p| (p, full.clone())).collect(),
        }
    }

    pub fn context(&self) -> &ContextRef {
        &self.ctx
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn is_universal(&self) -> bool {
        let full = self.ctx.full_set();
        self.assignment.len() == self.ctx.parameter_count()
            && self.assignment.values().all(|img| *img == full)
    }

    /// Number of parameters in the domain.
    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn domain(&self) -> impl Iterator<Item = ParamId> + '_ {
        self.assignment.keys().copied()
    }

    pub fn domain_names(&self) -> Vec<&str> {
        self.domain().map(|p| self.ctx.parameter_name(p)).collect()
    }

    pub fn contains_parameter(&self, id: ParamId) -> bool {
        self.assignment.contains_key(&id)
    }

    /// The image at `param`, or `None` when the parameter is undefined.
    pub fn image(&self, param: &str) -> Result<Option<&ObjectSet>> {
        let id = self
            .ctx
            .parameter_id(param)
            .ok_or_else(|| ModelError::UnknownParameter(param.to_string()))?;
        Ok(self.assignment.get(&id))
    }

    /// Same as [`SoftSet::image`] but with the objects resolved to names.
    pub fn image_names(&self, param: &str) -> Result<Option<Vec<&str>>> {
        Ok(self
            .image(param)?
            .map(|img| self.ctx.object_names(img).collect()))
    }

    pub fn image_at(&self, id: ParamId) -> Option<&ObjectSet> {
        self.assignment.get(&id)
    }

    /// Defined parameters with their images, in context order.
    pub fn iter(&self) -> impl Iterator<Item = (ParamId, &ObjectSet)> + '_ {
        self.assignment.iter().map(|(&p, img)| (p, img))
    }

    /// Name pairs in canonical order; feeding them back to [`SoftSet::new`]
    /// reproduces this soft set.
    pub fn to_pairs(&self) -> Vec<(String, Vec<String>)> {
        self.iter()
            .map(|(p, img)| {
                (
                    self.ctx.parameter_name(p).to_string(),
                    self.ctx.object_names(img).map(str::to_string).collect(),
                )
            })
            .collect()
    }

    /// Re-expresses this soft set over another context by name, forgetting
    /// parameters and objects the target lacks. Images that become empty are
    /// dropped.
    pub fn restrict_to(&self, target: &ContextRef) -> SoftSet {
        let images = self.iter().filter_map(|(p, img)| {
            let tp = target.parameter_id(self.ctx.parameter_name(p))?;
            let mut out = target.empty_set();
            for o in img.iter() {
                if let Some(to) = target.object_id(self.ctx.object_name(o)) {
                    out.insert(to);
                }
            }
            Some((tp, out))
        });
        SoftSet::from_images(target, images)
    }
}

impl PartialEq for SoftSet {
    fn eq(&self, other: &Self) -> bool {
        same_context(&self.ctx, &other.ctx) && self.assignment == other.assignment
    }
}

impl Eq for SoftSet {}

impl fmt::Display for SoftSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (p, img)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}: {{", self.ctx.parameter_name(p))?;
            for (j, name) in self.ctx.object_names(img).enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                f.write_str(name)?;
            }
            f.write_str("}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for SoftSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SoftSet{self}")
    }
}
