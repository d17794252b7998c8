//! Type-A quiver data: settings, representations, actions and stability.

mod random;
mod rep;
mod setting;
mod stability;

pub use random::{
    fixed_point_gauge, random_group_element, random_representation, random_torus_point,
    representation_of_fixed_point, Constraint,
};
pub use rep::{group_act, moment_map, torus_act, Representation};
pub use setting::{QuiverSetting, Theta, TorusPoint};
pub use stability::{is_semistable, theta_minus_closure, theta_plus_destabilizer};
