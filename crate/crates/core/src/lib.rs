//! Exact symbolic kernel for twisted partial Hopf actions.
//!
//! The crate verifies, over exact multivariate polynomial scalars, that a
//! pair of linear maps (an action of a Hopf algebra on a unital algebra and
//! a cocycle) satisfies the twisted-partial-action axioms, and constructs
//! the resulting partial crossed product: its sharp generators, an extracted
//! basis, and the multiplication table.
//!
//! Modules, roughly bottom-up:
//!
//! * [`symbolic`] - rationals and multivariate polynomials in named
//!   parameters, with canonical normal forms.
//! * [`algebra`] - structure-constant algebras, their elements, and tensor
//!   elements.
//! * [`hopf`] - comultiplication, counit, antipode, iterated Sweedler
//!   expansion, and the coalgebra/bialgebra/antipode checks.
//! * [`partial_action`] - the action/cocycle data and the axiom verifiers
//!   E1 through E6.
//! * [`crossed_product`] - sharp elements, the product on the tensor space,
//!   basis extraction by fraction-free elimination, and product tables.
//! * [`catalog`] - built-in example data, stored as definition files and
//!   loaded through the parser.
//! * [`io`] - the definition file format, expression evaluation, and report
//!   rendering.

pub mod algebra;
pub mod catalog;
pub mod crossed_product;
pub mod hopf;
pub mod io;
pub mod partial_action;
pub mod report;
pub mod symbolic;
