use std::fs;
use std::io::Read;
use std::path::Path;

use anyhow::{bail, Context as _, Result};
use setheq_core::{
    parse_instance, serialize_instance, CnfFormula, Graph, Instance, InstanceFormat, SetSystem,
    SubsetSumInstance, VspCircuit,
};

/// Read and parse `path`, or standard input for `-`.
pub fn read(path: &Path, format: InstanceFormat) -> Result<Instance> {
    let bytes = if path == Path::new("-") {
        let mut buf = Vec::new();
        std::io::stdin().read_to_end(&mut buf)?;
        buf
    } else {
        fs::read(path).with_context(|| format!("reading {}", path.display()))?
    };
    parse_instance(format, &bytes)
        .map_err(anyhow::Error::new)
        .with_context(|| format!("parsing {} as {format}", path.display()))
}

pub fn write(path: &Path, instance: &Instance) -> Result<()> {
    let bytes = serialize_instance(instance);
    if path == Path::new("-") {
        use std::io::Write;
        std::io::stdout().write_all(&bytes)?;
        return Ok(());
    }
    fs::write(path, bytes).with_context(|| format!("writing {}", path.display()))
}

macro_rules! reader {
    ($name:ident, $ty:ty, $format:ident, $variant:ident) => {
        pub fn $name(path: &Path) -> Result<$ty> {
            match read(path, InstanceFormat::$format)? {
                Instance::$variant(x) => Ok(x),
                other => bail!("expected {}, got {}", InstanceFormat::$format, other.format()),
            }
        }
    };
}

reader!(cnf, CnfFormula, DimacsCnf, Cnf);
reader!(set_system, SetSystem, SetSys, SetSystem);
reader!(graph, Graph, Graph, Graph);
reader!(subset_sum, SubsetSumInstance, SubsetSum, SubsetSum);
reader!(circuit, VspCircuit, Circuit, Circuit);
