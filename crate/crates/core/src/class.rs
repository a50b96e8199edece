use std::fmt;
use std::str::FromStr;

use rug::Rational;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::series::{Coeff, MarkerPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphClass {
    /// Graphs with no K33 minor.
    K33,
    /// Graphs with no minor isomorphic to K33 plus one edge inside a part.
    K33Plus,
    /// Maximal K33-minor-free graphs.
    Maximal,
}

impl GraphClass {
    pub const ALL: [GraphClass; 3] = [GraphClass::K33, GraphClass::K33Plus, GraphClass::Maximal];

    pub fn name(self) -> &'static str {
        match self {
            GraphClass::K33 => "k33",
            GraphClass::K33Plus => "k33plus",
            GraphClass::Maximal => "maximal",
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "k33" => Ok(GraphClass::K33),
            "k33plus" | "k33+" => Ok(GraphClass::K33Plus),
            "maximal" | "maximal_k33" => Ok(GraphClass::Maximal),
            other => Err(Error::Config(format!("unknown class {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Connectivity {
    All,
    Connected,
    Biconnected,
}

impl Connectivity {
    pub const ALL: [Connectivity; 3] = [Connectivity::All, Connectivity::Connected, Connectivity::Biconnected];

    pub fn name(self) -> &'static str {
        match self {
            Connectivity::All => "all",
            Connectivity::Connected => "connected",
            Connectivity::Biconnected => "biconnected",
        }
    }
}

impl fmt::Display for Connectivity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Connectivity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "all" | "any" => Ok(Connectivity::All),
            "connected" => Ok(Connectivity::Connected),
            "biconnected" | "2-connected" => Ok(Connectivity::Biconnected),
            other => Err(Error::Config(format!("unknown connectivity {other:?}"))),
        }
    }
}

/// What to enumerate and which markers to keep symbolic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ClassSpec {
    pub class: GraphClass,
    pub connectivity: Connectivity,
    pub track_edges: bool,
    pub track_k5: bool,
}

impl ClassSpec {
    pub fn new(class: GraphClass, connectivity: Connectivity) -> Self {
        ClassSpec { class, connectivity, track_edges: false, track_k5: false }
    }
}

/// Values substituted for the edge marker `y` and the K5 marker `q`.
#[derive(Debug, Clone, PartialEq)]
pub struct Markers<C> {
    pub y: C,
    pub q: C,
}

impl<C: Coeff> Markers<C> {
    /// Both markers set to 1.
    pub fn unit() -> Self {
        Markers { y: C::one(), q: C::one() }
    }

    pub fn one_plus_y(&self) -> C {
        self.y.plus(&C::one())
    }
}

impl Markers<Rational> {
    pub fn with_q(q: Rational) -> Self {
        Markers { y: Rational::from(1), q }
    }
}

impl Markers<MarkerPoly> {
    /// Symbolic `y` and `q`.
    pub fn symbolic() -> Self {
        Markers { y: MarkerPoly::y(), q: MarkerPoly::q() }
    }

    /// Symbolic `y`, with `q` fixed to a rational value.
    pub fn edges_only(q: &Rational) -> Self {
        Markers { y: MarkerPoly::y(), q: MarkerPoly::from_rational(q) }
    }
}
