//! Order sequences of finite groups and the machinery around them: group
//! construction and catalogs, finite fields, domination of sequences,
//! partitions, posets and power graphs.

pub mod arith;
pub mod expr;
pub mod field;
pub mod graphs;
pub mod group;
pub mod partition;
pub mod poset;
pub mod sequence;
