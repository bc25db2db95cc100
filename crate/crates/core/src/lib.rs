pub mod algebra;
pub mod bell;
pub mod moments;
pub mod prob_bell;
pub mod identities;
