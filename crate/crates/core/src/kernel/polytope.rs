use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::dd::cone_generators;
use super::matrix::{affine_rank, rank};
use super::point::Point;
use super::rational::{self, Rational};
use crate::error::{Error, Result};

/// The closed half-space `<normal, x> <= offset`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfSpace {
    normal: Point,
    offset: Rational,
}

impl HalfSpace {
    pub fn new(normal: Point, offset: Rational) -> Result<Self> {
        if normal.is_zero() {
            return Err(Error::DegenerateInput("half-space normal is zero".into()));
        }
        Ok(HalfSpace { normal, offset })
    }

    /// `<normal, x> >= offset`, stored as `<-normal, x> <= -offset`.
    pub fn at_least(normal: Point, offset: Rational) -> Result<Self> {
        Self::new(-&normal, -offset)
    }

    pub fn normal(&self) -> &Point {
        &self.normal
    }

    pub fn offset(&self) -> &Rational {
        &self.offset
    }

    pub fn dim(&self) -> usize {
        self.normal.dim()
    }

    /// `offset - <normal, x>`: nonnegative inside, zero on the boundary.
    pub fn slack(&self, x: &Point) -> Rational {
        &self.offset - self.normal.dot(x)
    }

    pub fn contains(&self, x: &Point) -> bool {
        !self.slack(x).is_negative()
    }

    pub fn on_boundary(&self, x: &Point) -> bool {
        self.slack(x).is_zero()
    }

    /// The closure of the complement, `<normal, x> >= offset`.
    pub fn complement(&self) -> HalfSpace {
        HalfSpace {
            normal: -&self.normal,
            offset: -&self.offset,
        }
    }
}

impl fmt::Display for HalfSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}, x> <= {}", self.normal, self.offset)
    }
}

/// Irredundant facet description of a bounded full-dimensional polytope.
///
/// Normals are primitive integer vectors and facets are sorted
/// lexicographically by `(normal, offset)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HPolytope {
    dim: usize,
    facets: Vec<HalfSpace>,
}

impl HPolytope {
    /// Canonicalizes an arbitrary inequality system describing a bounded
    /// full-dimensional polytope.
    pub fn new(dim: usize, inequalities: Vec<HalfSpace>) -> Result<Self> {
        check_dims(dim, inequalities.iter().map(HalfSpace::dim))?;
        Ok(v_to_h(&h_to_v(&HPolytope {
            dim,
            facets: inequalities,
        })?))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn facets(&self) -> &[HalfSpace] {
        &self.facets
    }

    pub fn contains(&self, x: &Point, strict: bool) -> bool {
        contains(self, x, strict)
    }
}

/// Vertex description of a full-dimensional polytope. Vertices are
/// irredundant and sorted lexicographically, so equal polytopes compare equal.
pub struct VPolytope {
    dim: usize,
    vertices: Vec<Point>,
    facets: OnceLock<HPolytope>,
    scaled: OnceLock<Vec<Scaled>>,
}

/// `values / denom` with integer entries and a positive denominator.
#[derive(Clone, Debug)]
struct Scaled {
    values: Vec<BigInt>,
    denom: BigInt,
}

impl Scaled {
    fn of(values: &[Rational]) -> Self {
        let denom = rational::common_denominator(values);
        Scaled {
            values: values.iter().map(|v| (v * &denom).to_integer()).collect(),
            denom,
        }
    }

    fn dot(&self, other: &Scaled) -> BigInt {
        self.values
            .iter()
            .zip(&other.values)
            .fold(BigInt::zero(), |acc, (a, b)| acc + a * b)
    }
}

/// `f.on_boundary(x)` on scaled integer data.
fn incident(normal: &Scaled, offset: &Rational, x: &Scaled) -> bool {
    normal.dot(x) * offset.denom() == offset.numer() * &normal.denom * &x.denom
}

/// Vertex indices on the boundary of each half-space.
fn incidences<'a>(
    points: &'a [Scaled],
    halfspaces: &'a [HalfSpace],
) -> impl Iterator<Item = Vec<usize>> + 'a {
    halfspaces.iter().map(move |f| {
        let n = Scaled::of(f.normal.coords());
        (0..points.len())
            .filter(|&i| incident(&n, &f.offset, &points[i]))
            .collect()
    })
}

impl Clone for VPolytope {
    fn clone(&self) -> Self {
        VPolytope {
            dim: self.dim,
            vertices: self.vertices.clone(),
            facets: self.facets.clone(),
            scaled: self.scaled.clone(),
        }
    }
}

impl fmt::Debug for VPolytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("VPolytope")
            .field("dim", &self.dim)
            .field("vertices", &self.vertices)
            .finish()
    }
}

impl PartialEq for VPolytope {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.vertices == other.vertices
    }
}

impl Eq for VPolytope {}

impl std::hash::Hash for VPolytope {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.dim.hash(state);
        self.vertices.hash(state);
    }
}

impl fmt::Display for VPolytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "conv(")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

impl VPolytope {
    /// Convex hull of `points`; see [`hull`].
    pub fn from_points(points: Vec<Point>) -> Result<Self> {
        hull(points)
    }

    /// Builds from points already known to be exactly the vertex set.
    pub(crate) fn from_vertices_unchecked(dim: usize, mut vertices: Vec<Point>) -> Self {
        vertices.sort();
        vertices.dedup();
        VPolytope {
            dim,
            vertices,
            facets: OnceLock::new(),
            scaled: OnceLock::new(),
        }
    }

    /// The polytope `{x : <a, x> <= b}` cut out by arbitrary (possibly
    /// redundant) half-spaces.
    pub fn from_inequalities(dim: usize, inequalities: Vec<HalfSpace>) -> Result<Self> {
        check_dims(dim, inequalities.iter().map(HalfSpace::dim))?;
        h_to_v(&HPolytope {
            dim,
            facets: inequalities,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    /// The facet description, computed once and cached.
    pub fn h(&self) -> &HPolytope {
        self.facets.get_or_init(|| HPolytope {
            dim: self.dim,
            facets: facets_of_points(self.dim, &self.vertices)
                .expect("vertex set of a VPolytope is full-dimensional"),
        })
    }

    pub fn contains(&self, x: &Point, strict: bool) -> bool {
        contains(self.h(), x, strict)
    }

    pub fn is_lattice(&self) -> bool {
        self.vertices.iter().all(Point::is_integral)
    }

    pub fn is_simplex(&self) -> bool {
        self.vertices.len() == self.dim + 1
    }

    pub fn translate(&self, shift: &Point) -> VPolytope {
        let vertices = self.vertices.iter().map(|v| v + shift).collect();
        VPolytope::from_vertices_unchecked(self.dim, vertices)
    }

    /// `factor * P`; `factor` must be nonzero.
    pub fn scale(&self, factor: &Rational) -> VPolytope {
        assert!(!factor.is_zero(), "scaling a polytope by zero");
        let vertices = self.vertices.iter().map(|v| v.scale(factor)).collect();
        VPolytope::from_vertices_unchecked(self.dim, vertices)
    }

    /// The reflection `-P`.
    pub fn neg(&self) -> VPolytope {
        self.scale(&-Rational::one())
    }

    /// `t * conv(0, e_1, ..., e_n)`.
    pub fn standard_simplex(dim: usize, multiplier: &Rational) -> VPolytope {
        let mut vertices = vec![Point::zeros(dim)];
        vertices.extend((0..dim).map(|i| Point::unit(dim, i).scale(multiplier)));
        VPolytope::from_vertices_unchecked(dim, vertices)
    }

    /// The cube `[lo, hi]^n`.
    pub fn cube(dim: usize, lo: &Rational, hi: &Rational) -> VPolytope {
        let vertices = (0..1usize << dim)
            .map(|mask| {
                Point::new(
                    (0..dim)
                        .map(|i| {
                            if mask >> i & 1 == 1 {
                                hi.clone()
                            } else {
                                lo.clone()
                            }
                        })
                        .collect(),
                )
            })
            .collect();
        VPolytope::from_vertices_unchecked(dim, vertices)
    }

    /// Vertices lying on the boundary of `facet`.
    pub fn vertices_on<'a>(&'a self, facet: &'a HalfSpace) -> impl Iterator<Item = usize> + 'a {
        let points = self.scaled_vertices();
        let normal = Scaled::of(facet.normal.coords());
        (0..self.vertices.len()).filter(move |&i| incident(&normal, &facet.offset, &points[i]))
    }

    /// Vertex indices on each facet, in facet order.
    pub fn facet_incidences(&self) -> Vec<Vec<usize>> {
        incidences(self.scaled_vertices(), self.h().facets()).collect()
    }

    fn scaled_vertices(&self) -> &[Scaled] {
        self.scaled.get_or_init(|| {
            self.vertices
                .iter()
                .map(|v| Scaled::of(v.coords()))
                .collect()
        })
    }
}

fn check_dims(dim: usize, dims: impl Iterator<Item = usize>) -> Result<()> {
    for found in dims {
        if found != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found,
            });
        }
    }
    Ok(())
}

/// Facets of `conv(points)`: extreme rays of `{(c, e) : <c, v> + e >= 0}`.
fn facets_of_points(dim: usize, points: &[Point]) -> Result<Vec<HalfSpace>> {
    let rows: Vec<Vec<Rational>> = points
        .iter()
        .map(|p| {
            let mut r = p.coords().to_vec();
            r.push(Rational::one());
            r
        })
        .collect();
    let gens = cone_generators(dim + 1, &rows);
    if !gens.lineality.is_empty() || dim == 0 {
        return Err(Error::DegenerateInput(
            "points do not span the ambient space affinely".into(),
        ));
    }
    let mut facets: Vec<HalfSpace> = gens
        .rays
        .into_iter()
        .map(|mut ray| {
            let offset = ray.pop().expect("ray has dim+1 entries");
            canonical_halfspace(ray.iter().map(|c| -c).collect(), offset)
        })
        .collect();
    facets.sort();
    Ok(facets)
}

/// `<normal, x> <= offset` rescaled to a primitive integer normal.
fn canonical_halfspace(normal: Vec<Rational>, offset: Rational) -> HalfSpace {
    let primitive = rational::primitive_direction(&normal);
    let i = first_nonzero(&normal);
    let scale = &primitive[i] / &normal[i];
    HalfSpace {
        normal: Point::new(primitive),
        offset: offset * scale,
    }
}

fn first_nonzero(v: &[Rational]) -> usize {
    v.iter()
        .position(|x| !x.is_zero())
        .expect("facet normal is nonzero")
}

/// Irredundant, lexicographically ordered vertex set of `conv(points)`.
pub fn hull(points: Vec<Point>) -> Result<VPolytope> {
    let Some(dim) = points.first().map(Point::dim) else {
        return Err(Error::DegenerateInput("empty point set".into()));
    };
    check_dims(dim, points.iter().map(Point::dim))?;
    let mut points = points;
    points.sort();
    points.dedup();
    let facets = facets_of_points(dim, &points)?;
    let scaled: Vec<Scaled> = points.iter().map(|p| Scaled::of(p.coords())).collect();
    let mut on: Vec<Vec<usize>> = vec![Vec::new(); points.len()];
    for (j, tight) in incidences(&scaled, &facets).enumerate() {
        for i in tight {
            on[i].push(j);
        }
    }
    let vertices: Vec<Point> = points
        .into_iter()
        .zip(on)
        .filter(|(_, on)| {
            let normals: Vec<Vec<Rational>> = on
                .iter()
                .map(|&j| facets[j].normal.coords().to_vec())
                .collect();
            normals.len() >= dim && rank(&normals) == dim
        })
        .map(|(p, _)| p)
        .collect();
    let polytope = VPolytope::from_vertices_unchecked(dim, vertices);
    let _ = polytope.facets.set(HPolytope { dim, facets });
    Ok(polytope)
}

pub fn v_to_h(p: &VPolytope) -> HPolytope {
    p.h().clone()
}

/// Vertices of `{x : <a, x> <= b}` for the given half-spaces.
pub(crate) fn enumerate_vertices(dim: usize, halfspaces: &[HalfSpace]) -> Result<Vec<Point>> {
    check_dims(dim, halfspaces.iter().map(HalfSpace::dim))?;
    // Homogenize: b t - <a, x> >= 0 and t >= 0.
    let mut rows: Vec<Vec<Rational>> = halfspaces
        .iter()
        .map(|h| {
            let mut r: Vec<Rational> = h.normal.coords().iter().map(|c| -c).collect();
            r.push(h.offset.clone());
            r
        })
        .collect();
    let mut t_row = vec![Rational::zero(); dim + 1];
    t_row[dim] = Rational::one();
    rows.push(t_row);

    let gens = cone_generators(dim + 1, &rows);
    let mut vertices = Vec::new();
    let mut recession = !gens.lineality.is_empty();
    for mut ray in gens.rays {
        let t = ray.pop().expect("ray has dim+1 entries");
        if t.is_positive() {
            vertices.push(Point::new(ray.iter().map(|c| c / &t).collect()));
        } else {
            recession = true;
        }
    }
    if vertices.is_empty() {
        return Err(Error::Empty);
    }
    if recession {
        return Err(Error::Unbounded);
    }
    vertices.sort();
    Ok(vertices)
}

/// Exact vertex enumeration of a bounded full-dimensional H-polytope.
pub fn h_to_v(p: &HPolytope) -> Result<VPolytope> {
    let vertices = enumerate_vertices(p.dim, &p.facets)?;
    let refs: Vec<&Point> = vertices.iter().collect();
    if affine_rank(&refs) != Some(p.dim) {
        return Err(Error::DegenerateInput(
            "inequality system is not full-dimensional".into(),
        ));
    }
    let scaled: Vec<Scaled> = vertices.iter().map(|v| Scaled::of(v.coords())).collect();
    let mut facets: Vec<HalfSpace> = p
        .facets
        .iter()
        .zip(incidences(&scaled, &p.facets))
        .filter(|(_, tight)| {
            let tight: Vec<&Point> = tight.iter().map(|&i| &vertices[i]).collect();
            tight.len() >= p.dim && affine_rank(&tight) == Some(p.dim - 1)
        })
        .map(|(f, _)| canonical_halfspace(f.normal.coords().to_vec(), f.offset.clone()))
        .collect();
    facets.sort();
    facets.dedup();
    let polytope = VPolytope::from_vertices_unchecked(p.dim, vertices);
    let _ = polytope.facets.set(HPolytope { dim: p.dim, facets });
    Ok(polytope)
}

/// Membership test; `strict` asks for the interior.
pub fn contains(p: &HPolytope, x: &Point, strict: bool) -> bool {
    p.facets.iter().all(|f| {
        let s = f.slack(x);
        if strict {
            s.is_positive()
        } else {
            !s.is_negative()
        }
    })
}

/// Result of cutting a polytope: may be empty or lower-dimensional.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Section {
    Empty,
    /// Nonempty but not full-dimensional; `dim` is the affine dimension.
    Degenerate {
        dim: usize,
        vertices: Vec<Point>,
    },
    Full(VPolytope),
}

impl Section {
    /// Affine dimension, `None` when empty.
    pub fn dim(&self) -> Option<usize> {
        match self {
            Section::Empty => None,
            Section::Degenerate { dim, .. } => Some(*dim),
            Section::Full(p) => Some(p.dim()),
        }
    }

    /// Euclidean `n`-volume; zero unless full-dimensional.
    pub fn volume(&self) -> Rational {
        match self {
            Section::Full(p) => super::triangulate::volume(p),
            _ => Rational::zero(),
        }
    }

    pub fn polytope(&self) -> Option<&VPolytope> {
        match self {
            Section::Full(p) => Some(p),
            _ => None,
        }
    }

    pub fn hpolytope(&self) -> Option<&HPolytope> {
        self.polytope().map(VPolytope::h)
    }

    pub fn vertices(&self) -> &[Point] {
        match self {
            Section::Empty => &[],
            Section::Degenerate { vertices, .. } => vertices,
            Section::Full(p) => p.vertices(),
        }
    }
}

fn section_of(dim: usize, halfspaces: &[HalfSpace]) -> Result<Section> {
    let vertices = match enumerate_vertices(dim, halfspaces) {
        Ok(v) => v,
        Err(Error::Empty) => return Ok(Section::Empty),
        Err(e) => return Err(e),
    };
    let refs: Vec<&Point> = vertices.iter().collect();
    let affine = affine_rank(&refs).expect("nonempty vertex set");
    if affine < dim {
        // Reduce to the irredundant vertex set of the lower-dimensional face.
        let vertices = vertices
            .iter()
            .filter(|v| {
                let tight: Vec<Vec<Rational>> = halfspaces
                    .iter()
                    .filter(|h| h.on_boundary(v))
                    .map(|h| h.normal.coords().to_vec())
                    .collect();
                !tight.is_empty() && rank(&tight) == dim
            })
            .cloned()
            .collect();
        return Ok(Section::Degenerate {
            dim: affine,
            vertices,
        });
    }
    Ok(Section::Full(VPolytope::from_vertices_unchecked(
        dim, vertices,
    )))
}

/// `P ∩ H`.
pub fn intersect(p: &HPolytope, h: &HalfSpace) -> Result<Section> {
    check_dims(p.dim, std::iter::once(h.dim()))?;
    let mut all = p.facets.clone();
    all.push(h.clone());
    section_of(p.dim, &all)
}

/// `A ∩ B` for two polytopes of the same dimension.
pub fn intersect_polytopes(a: &HPolytope, b: &HPolytope) -> Result<Section> {
    check_dims(a.dim, std::iter::once(b.dim))?;
    let mut all = a.facets.clone();
    all.extend(b.facets.iter().cloned());
    section_of(a.dim, &all)
}
