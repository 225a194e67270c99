//! Library side of the `toral` binary: the document model with its three
//! interchange formats, and the verification suite.

pub mod document;
pub mod verify;
