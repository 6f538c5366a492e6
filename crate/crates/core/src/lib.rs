pub mod bundle;
pub mod error;
pub mod ideal;
pub mod ring;
pub mod zero_scheme;
pub mod point;
pub mod pgl;
pub mod cross_ratio;
pub mod json;
