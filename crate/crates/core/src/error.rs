use alloc::string::String;
use core::fmt;

/// Errors raised by the algebraic layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two morphisms or spaces whose dimensions had to agree did not.
    DimensionMismatch {
        expected: usize,
        found: usize,
    },
    /// An image list repeats a nonzero target or points outside the target.
    NotPartialInjection(String),
    /// An endomorphism was required.
    NotSquare {
        src: usize,
        tgt: usize,
    },
    /// `count_subspaces` called with k > n.
    SubspaceTooLarge {
        n: usize,
        k: usize,
    },
    Overflow,
    /// A vertex index outside `0..num_vertices`.
    BadVertex {
        vertex: usize,
        num_vertices: usize,
    },
    /// A representation whose edge map does not fit its vertex spaces.
    EdgeShape {
        edge: usize,
        expected: (usize, usize),
        found: (usize, usize),
    },
    /// Wrong number of spaces or edge maps for the quiver.
    RepShape(String),
    QuiverMismatch,
    /// A commuting square fails for this edge.
    NotCommuting {
        edge: usize,
    },
    /// A vertexwise subset is not closed under this edge map.
    NotClosed {
        edge: usize,
    },
    NotNilpotent,
    ZeroRepresentation,
    /// The quiver carries a self-loop, so it has no Cartan datum.
    SelfLoop {
        vertex: usize,
    },
    NotFiniteType,
    RankTooLarge {
        rank: usize,
        max: usize,
    },
    /// A dimension vector does not have the shape an operation needs.
    Degree(String),
    /// Malformed canonical key or class name.
    BadKey(String),
    /// Input outside the domain of a family-specific construction.
    Domain(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::NotPartialInjection(msg) => write!(f, "not a partial injection: {msg}"),
            Error::NotSquare { src, tgt } => {
                write!(f, "expected an endomorphism, got a map {src} -> {tgt}")
            }
            Error::SubspaceTooLarge { n, k } => {
                write!(f, "no {k}-dimensional subspaces of a {n}-dimensional space")
            }
            Error::Overflow => write!(f, "integer overflow"),
            Error::BadVertex {
                vertex,
                num_vertices,
            } => write!(
                f,
                "vertex {vertex} out of range (quiver has {num_vertices})"
            ),
            Error::EdgeShape {
                edge,
                expected,
                found,
            } => write!(
                f,
                "edge e{edge}: map should be {} -> {}, found {} -> {}",
                expected.0, expected.1, found.0, found.1
            ),
            Error::RepShape(msg) => write!(f, "malformed representation: {msg}"),
            Error::QuiverMismatch => write!(f, "representations live on different quivers"),
            Error::NotCommuting { edge } => write!(f, "square at edge e{edge} does not commute"),
            Error::NotClosed { edge } => write!(f, "subset not closed under edge e{edge}"),
            Error::NotNilpotent => write!(f, "representation is not nilpotent"),
            Error::ZeroRepresentation => write!(f, "zero representation"),
            Error::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            Error::NotFiniteType => write!(f, "Cartan matrix is not of finite type"),
            Error::RankTooLarge { rank, max } => {
                write!(f, "rank {rank} exceeds supported maximum {max}")
            }
            Error::Degree(msg) => write!(f, "degree mismatch: {msg}"),
            Error::BadKey(msg) => write!(f, "bad class key: {msg}"),
            Error::Domain(msg) => write!(f, "{msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
