//! Three-way conflict analysis over three-valued situation tables with
//! separate alliance and conflict functions.

pub mod auxiliary;
pub mod bifunctions;
pub mod decisions;
pub mod error;
pub mod model;
pub mod relations;
pub mod strategies;

pub use auxiliary::AuxiliaryModel;
pub use bifunctions::{AggregationScope, DegreePair};
pub use decisions::{CombinationChoice, Description, Restrict};
pub use error::{Error, IdKind, Result};
pub use model::{Agent, Issue, Part, Rating, Rational, SituationTable, ThresholdPair, Trisection};
pub use relations::{PairRules, PairScope, PairThresholds};
pub use strategies::{FamilyKind, Strategy};
