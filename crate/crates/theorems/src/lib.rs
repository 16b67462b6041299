//! Verification suites for order-sequence results, plus the constructive
//! witnesses for non-nilpotent orders.

mod report;
pub mod suites;
mod witness;

use ordseq_core::field::FieldError;
use ordseq_core::group::GroupError;
use thiserror::Error;

pub use report::SuiteReport;
pub use suites::{Suite, SuiteOptions, DEFAULT_SEED};
pub use witness::{
    all_witnesses, brute_force_witness, minimal_nonnilpotent_group, nonnilpotent_order_witness, witness_group, Witness,
};

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("every group of order {0} is nilpotent")]
    NoWitness(u64),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Field(#[from] FieldError),
}
