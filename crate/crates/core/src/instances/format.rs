use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

use super::{CnfFormula, Graph, SetSystem, SubsetSumInstance, VspCircuit};

/// The on-disk text formats.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum InstanceFormat {
    DimacsCnf,
    SetSys,
    Graph,
    SubsetSum,
    Circuit,
}

impl InstanceFormat {
    pub const ALL: [InstanceFormat; 5] = [
        InstanceFormat::DimacsCnf,
        InstanceFormat::SetSys,
        InstanceFormat::Graph,
        InstanceFormat::SubsetSum,
        InstanceFormat::Circuit,
    ];

    pub fn name(self) -> &'static str {
        match self {
            InstanceFormat::DimacsCnf => "dimacs-cnf",
            InstanceFormat::SetSys => "setsys",
            InstanceFormat::Graph => "graph",
            InstanceFormat::SubsetSum => "subsetsum",
            InstanceFormat::Circuit => "circuit",
        }
    }
}

impl fmt::Display for InstanceFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for InstanceFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dimacs-cnf" | "cnf" => Ok(InstanceFormat::DimacsCnf),
            "setsys" => Ok(InstanceFormat::SetSys),
            "graph" => Ok(InstanceFormat::Graph),
            "subsetsum" => Ok(InstanceFormat::SubsetSum),
            "circuit" => Ok(InstanceFormat::Circuit),
            _ => Err(Error::param(format!("unknown format `{s}`"))),
        }
    }
}

/// Any instance the formats can carry.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Instance {
    Cnf(CnfFormula),
    SetSystem(SetSystem),
    Graph(Graph),
    SubsetSum(SubsetSumInstance),
    Circuit(VspCircuit),
}

impl Instance {
    pub fn format(&self) -> InstanceFormat {
        match self {
            Instance::Cnf(_) => InstanceFormat::DimacsCnf,
            Instance::SetSystem(_) => InstanceFormat::SetSys,
            Instance::Graph(_) => InstanceFormat::Graph,
            Instance::SubsetSum(_) => InstanceFormat::SubsetSum,
            Instance::Circuit(_) => InstanceFormat::Circuit,
        }
    }
}

/// Parse `bytes` in the given format. Input must be UTF-8.
pub fn parse_instance(format: InstanceFormat, bytes: &[u8]) -> Result<Instance> {
    let text = std::str::from_utf8(bytes).map_err(|e| {
        let line = bytes[..e.valid_up_to()].iter().filter(|&&b| b == b'\n').count() + 1;
        Error::parse(line, "input is not valid UTF-8")
    })?;
    Ok(match format {
        InstanceFormat::DimacsCnf => Instance::Cnf(CnfFormula::parse_dimacs(text)?),
        InstanceFormat::SetSys => Instance::SetSystem(SetSystem::parse(text)?),
        InstanceFormat::Graph => Instance::Graph(Graph::parse(text)?),
        InstanceFormat::SubsetSum => Instance::SubsetSum(SubsetSumInstance::parse(text)?),
        InstanceFormat::Circuit => Instance::Circuit(VspCircuit::parse(text)?),
    })
}

/// Canonical, deterministic text form.
pub fn serialize_instance(instance: &Instance) -> Vec<u8> {
    match instance {
        Instance::Cnf(f) => f.to_dimacs(),
        Instance::SetSystem(s) => s.to_text(),
        Instance::Graph(g) => g.to_text(),
        Instance::SubsetSum(s) => s.to_text(),
        Instance::Circuit(c) => c.to_text(),
    }
    .into_bytes()
}
