pub mod ball;
pub mod boundary;
pub mod calibration;
pub mod criteria;
pub mod density;
pub mod error;
pub mod gaussmod;
pub mod geometry;
pub mod numeric;
pub mod oracle;
pub mod profile;
pub mod special;
pub mod stationarity;
pub mod strip;

pub use density::Density;
pub use error::{Error, Result};
pub use geometry::Point;
