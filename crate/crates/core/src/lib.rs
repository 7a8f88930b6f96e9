//! Converts Java, Python and JavaScript source into four machine-readable
//! representations: BPE token sequences, abstract syntax trees, data-flow
//! graphs and control-flow graphs.
//!
//! Every representation serializes to a versioned JSON envelope (see
//! [`export`]) and the graph-shaped ones also render to DOT. The
//! [`engine`] module ties the pieces together and is what the CLI, the HTTP
//! service and the browser demo all call, so their outputs agree byte for
//! byte.

pub mod controlflow;
pub mod corpus;
pub mod dataflow;
pub mod engine;
pub mod export;
mod lower;
pub mod model;
pub mod syntax;
pub mod tokenizer;

pub use controlflow::{extract_cfg, BasicBlock, BlockKind, Cfg, CfgEdge, CfgSet, EdgeLabel};
pub use dataflow::{extract_dfg, Dfg, DfgEdge, DfgNode, FlowKind, Role};
pub use engine::{convert, ConvertError, ConvertOptions, Conversion, OutputFormat};
pub use export::{to_dot, to_json, DotDocument, Envelope, Payload};
pub use model::{
    validate_source, Diagnostic, Language, Limits, RepresentationKind, Severity, SourceUnit, Span,
    SCHEMA_VERSION,
};
pub use syntax::{named_subtree, parse, parse_with, Ast, AstNode, NodeId, ParseOptions, SyntaxError};
pub use tokenizer::{
    decode, encode, pre_tokenize, train_bpe, Piece, TokenSequence, TokenizerError, Vocabulary,
};
