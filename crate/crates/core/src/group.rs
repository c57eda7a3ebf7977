use crate::alcove::Action;
use crate::error::Result;
use crate::lattices::{self, Center, CentralSubgroup};
use crate::rootsys::{RootSystem, SimpleType};

/// A simply connected group with its center and alcove action precomputed.
#[derive(Clone, Debug)]
pub struct Group {
    rs: RootSystem,
    center: Center,
    action: Action,
}

impl Group {
    pub fn new(ty: SimpleType) -> Result<Self> {
        let rs = RootSystem::build(ty)?;
        let center = lattices::center(&rs)?;
        let action = Action::new(&rs, &center)?;
        Ok(Group { rs, center, action })
    }

    pub fn parse(name: &str) -> Result<Self> {
        Self::new(name.parse()?)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn center(&self) -> &Center {
        &self.center
    }

    pub fn action(&self) -> &Action {
        &self.action
    }

    pub fn simple_type(&self) -> SimpleType {
        self.rs.simple_type()
    }

    pub fn subgroups(&self) -> Vec<CentralSubgroup> {
        lattices::subgroups(&self.rs, &self.center)
    }

    pub fn subgroup(&self, name: &str) -> Result<CentralSubgroup> {
        lattices::find_subgroup(&self.rs, &self.center, name)
    }

    pub fn full_center(&self) -> CentralSubgroup {
        self.subgroups().pop().expect("at least the trivial subgroup")
    }
}
