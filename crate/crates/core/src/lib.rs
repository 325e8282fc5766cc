pub mod algebra;
pub mod blowup;
pub mod complex;
pub mod construction;
pub mod fixtures;
pub mod flip;
pub mod intersection;
pub mod morse;
