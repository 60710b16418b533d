//! Reciprocal classes: normal forms, classification, enumeration and an
//! exhaustive cross-check.

mod census;
mod enumerate;
mod normal_form;
mod oracle;
mod shape;

pub use census::{
    sandwich_by_label, sandwich_by_shape, split_primitive_counts, ClassCensus, ClassCounts,
    Sandwich,
};
pub use enumerate::{
    enumerate_reciprocal_classes, enumerate_reciprocal_classes_sharded, symmetric_tuple_count,
    ReciprocalClassRecord,
};
pub use normal_form::{gen_normal_form, ExponentTuple, NormalForm, NormalFormSpec, Side};
pub use oracle::oracle_enumerate_reciprocal;
pub use shape::{
    classify_class, classify_shapes, structure_check, Classification, ReciprocalType, Shapes,
    StructureReport,
};
