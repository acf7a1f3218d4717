use alloc::boxed::Box;
use alloc::string::String;

use thiserror::Error as ThisError;

use crate::map::MapError;

/// Errors raised by polycycle validation, surgery and enumeration.
#[derive(Debug, Clone, PartialEq, Eq, ThisError)]
pub enum Error {
    #[error(transparent)]
    Map(#[from] MapError),
    #[error("rotation system is not spherical (V - E + F = {0})")]
    NotPlanar(i64),
    #[error("invalid parameters: {0}")]
    BadParams(String),
    #[error("face {face} is a {size}-gon, size not in R")]
    BadGonSize { face: usize, size: usize },
    #[error("holes {h1} and {h2} share vertex {vertex}")]
    HolesShareVertex { h1: usize, h2: usize, vertex: usize },
    #[error("vertex {vertex} has degree {degree} > q")]
    DegreeTooHigh { vertex: usize, degree: usize },
    #[error("interior vertex {vertex} has degree {degree} != q")]
    InteriorNotQValent { vertex: usize, degree: usize },
    #[error("proper faces and holes must both be non-empty")]
    EmptyPartition,
    #[error("graph is not 2-connected (face {face} revisits a vertex)")]
    NotTwoConnected { face: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("face {0} is not a hole")]
    NotAHole(usize),
    #[error("face {0} is not a proper face")]
    NotProper(usize),
    #[error("cannot remove the last proper face")]
    LastProperFace,
    #[error("removal leaves a graph that is not 2-connected")]
    ResultNotTwoConnected,
    #[error("result violates the polycycle axioms: {0}")]
    ResultViolatesAxioms(Box<Error>),
    #[error("vertex {vertex} would reach degree {degree} > q")]
    DegreeOverflow { vertex: usize, degree: usize },
    #[error("attachment would make holes meet")]
    HoleCollision,
    #[error("attachment run is malformed: {0}")]
    BadRun(&'static str),
    #[error("gon size {0} is not in R")]
    SizeNotInR(usize),
    #[error("edge {0} is not an open edge")]
    NotOpen(usize),
    #[error("operation requires q = 3, got q = {0}")]
    WrongValence(u32),
    #[error("parameters are not elliptic")]
    NotElliptic,
    #[error("face bound must be at least 1")]
    BoundTooSmall,
    #[error("unknown series {0}")]
    UnknownSeries(String),
    #[error("series index {index} is below the first member {first}")]
    IndexBelowStart { index: usize, first: usize },
    #[error("no catalog entry matches this {0}-face polycycle")]
    NotInCatalog(usize),
    #[error("bad family size: {0}")]
    BadSize(String),
}

impl Error {
    /// Wraps an axiom failure produced while checking the output of a surgery.
    pub(crate) fn in_result(self) -> Error {
        match self {
            Error::Disconnected | Error::Map(MapError::Disconnected) | Error::NotTwoConnected { .. } => {
                Error::ResultNotTwoConnected
            }
            Error::HolesShareVertex { .. } => Error::HoleCollision,
            Error::DegreeTooHigh { vertex, degree } => Error::DegreeOverflow { vertex, degree },
            other => Error::ResultViolatesAxioms(Box::new(other)),
        }
    }
}
