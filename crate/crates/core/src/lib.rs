pub mod algebra;
pub mod covering;
pub mod decompose;
pub mod endo;
pub mod error;
pub mod field;
pub mod functors;
pub mod golden;
pub mod group;
pub mod homological;
pub mod knit;
pub mod linalg;
pub mod module;
pub mod poly;
pub mod precluster;
pub mod presentation;
pub mod report;
pub mod structure;
pub mod subcategory;
pub mod suite;
pub mod tilting;
pub mod transfer;

pub use algebra::{Algebra, Path, QuiverArrow, Relation, Term};
pub use error::{Error, Result};
pub use field::{Field, FieldSpec, PrimeField, Rationals};
pub use group::{Group, GroupElem, Window};
pub use linalg::{solve_left, solve_linear, Mat};
pub use presentation::{load_presentation, AnyPresentation, GradedArrow, GradedQuiverPresentation, RawPresentation};
