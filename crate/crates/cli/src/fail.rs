use std::fmt;

use ordseq_core::expr::ExprError;
use ordseq_core::graphs::GraphError;
use ordseq_core::group::GroupError;
use ordseq_core::partition::PartitionError;
use ordseq_core::sequence::SequenceError;
use ordseq_theorems::BenchError;

pub const VERIFY_FAILED: u8 = 1;
pub const USAGE: u8 = 2;
pub const SIZE_LIMIT: u8 = 3;
pub const PRECONDITION: u8 = 4;
pub const UNSUPPORTED_ORDER: u8 = 5;

/// An error message with the exit status it maps to.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn new(code: u8, message: impl Into<String>) -> Failure {
        Failure { code, message: message.into() }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

fn group_code(e: &GroupError) -> u8 {
    match e {
        GroupError::SizeLimit { .. } => SIZE_LIMIT,
        GroupError::UnsupportedOrder(_) => UNSUPPORTED_ORDER,
        _ => USAGE,
    }
}

impl From<GroupError> for Failure {
    fn from(e: GroupError) -> Self {
        Failure::new(group_code(&e), e.to_string())
    }
}

impl From<ExprError> for Failure {
    fn from(e: ExprError) -> Self {
        let code = match &e {
            ExprError::SizeLimit { .. } => SIZE_LIMIT,
            ExprError::Group(g) => group_code(g),
            _ => USAGE,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<SequenceError> for Failure {
    fn from(e: SequenceError) -> Self {
        let code = match &e {
            SequenceError::LengthMismatch { .. } => PRECONDITION,
            SequenceError::Group(g) => group_code(g),
            _ => USAGE,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Self {
        let code = match &e {
            GraphError::SizeLimit { .. } | GraphError::SearchLimit(_) => SIZE_LIMIT,
            _ => PRECONDITION,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<PartitionError> for Failure {
    fn from(e: PartitionError) -> Self {
        let code = match &e {
            PartitionError::SizeLimit(_) | PartitionError::Overflow { .. } => SIZE_LIMIT,
            PartitionError::SizeMismatch { .. } | PartitionError::NotMajorized { .. } => PRECONDITION,
            _ => USAGE,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<BenchError> for Failure {
    fn from(e: BenchError) -> Self {
        let code = match &e {
            BenchError::Group(g) => group_code(g),
            _ => USAGE,
        };
        Failure::new(code, e.to_string())
    }
}
