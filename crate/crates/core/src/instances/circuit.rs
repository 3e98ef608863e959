use std::fmt;

use crate::error::{Error, Result};

use super::cnf::parse_count;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Gate {
    Input,
    Const(bool),
    Not(usize),
    And(usize, usize),
    Or(usize, usize),
}

impl Gate {
    /// Incoming wire sources, with multiplicity.
    pub fn sources(&self) -> impl Iterator<Item = usize> {
        let (a, b) = match *self {
            Gate::Input | Gate::Const(_) => (None, None),
            Gate::Not(x) => (Some(x), None),
            Gate::And(x, y) | Gate::Or(x, y) => (Some(x), Some(y)),
        };
        a.into_iter().chain(b)
    }

    fn kind(&self) -> &'static str {
        match self {
            Gate::Input => "INPUT",
            Gate::Const(true) => "TRUE",
            Gate::Const(false) => "FALSE",
            Gate::Not(_) => "NOT",
            Gate::And(..) => "AND",
            Gate::Or(..) => "OR",
        }
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.kind())?;
        for s in self.sources() {
            write!(f, " {s}")?;
        }
        Ok(())
    }
}

/// A boolean circuit with fan-in at most two, one designated output and an
/// optional integer label per node.
///
/// Input variables are numbered by the order of `Input` gates.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct VspCircuit {
    gates: Vec<Gate>,
    output: usize,
    labels: Option<Vec<u64>>,
    order: Vec<usize>,
}

impl VspCircuit {
    pub fn new(gates: Vec<Gate>, output: usize) -> Result<Self> {
        let n = gates.len();
        if output >= n {
            return Err(Error::Structure(format!("output gate {output} does not exist")));
        }
        for (i, g) in gates.iter().enumerate() {
            if let Some(s) = g.sources().find(|&s| s >= n) {
                return Err(Error::Structure(format!("gate {i} reads missing gate {s}")));
            }
        }
        let order = topological_order(&gates)
            .ok_or_else(|| Error::Structure("circuit contains a cycle".into()))?;
        Ok(VspCircuit {
            gates,
            output,
            labels: None,
            order,
        })
    }

    pub fn with_labels(mut self, labels: Vec<u64>) -> Result<Self> {
        if labels.len() != self.gates.len() {
            return Err(Error::param(format!(
                "{} labels for {} gates",
                labels.len(),
                self.gates.len()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn output(&self) -> usize {
        self.output
    }

    pub fn labels(&self) -> Option<&[u64]> {
        self.labels.as_deref()
    }

    pub fn num_inputs(&self) -> usize {
        self.gates.iter().filter(|g| matches!(g, Gate::Input)).count()
    }

    /// Number of wires, i.e. the total in-degree.
    pub fn wire_count(&self) -> usize {
        self.gates.iter().map(|g| g.sources().count()).sum()
    }

    /// All wires `(source, target)`, parallel wires repeated.
    pub fn wires(&self) -> Vec<(usize, usize)> {
        self.gates
            .iter()
            .enumerate()
            .flat_map(|(t, g)| g.sources().map(move |s| (s, t)))
            .collect()
    }

    /// Evaluate the output; bit `i` of `assignment` feeds the `i`-th input.
    pub fn eval(&self, assignment: u64) -> bool {
        let mut value = vec![false; self.gates.len()];
        let mut next_input = vec![usize::MAX; self.gates.len()];
        let mut k = 0;
        for (i, g) in self.gates.iter().enumerate() {
            if matches!(g, Gate::Input) {
                next_input[i] = k;
                k += 1;
            }
        }
        for &i in &self.order {
            value[i] = match self.gates[i] {
                Gate::Input => assignment >> next_input[i] & 1 == 1,
                Gate::Const(b) => b,
                Gate::Not(x) => !value[x],
                Gate::And(x, y) => value[x] && value[y],
                Gate::Or(x, y) => value[x] || value[y],
            };
        }
        value[self.output]
    }

    pub(crate) fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut gates: Vec<Option<Gate>> = Vec::new();
        let mut output = None;
        let mut labels: Vec<(usize, u64, usize)> = Vec::new();
        let mut last_line = 0;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            last_line = line_no;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            match parts[0] {
                "out" => {
                    if parts.len() != 2 || output.is_some() {
                        return Err(Error::parse(line_no, "expected a single `out <idx>` line"));
                    }
                    output = Some((parse_count(parts[1], line_no)?, line_no));
                }
                "label" => {
                    if parts.len() != 3 {
                        return Err(Error::parse(line_no, "expected `label <idx> <value>`"));
                    }
                    let i = parse_count(parts[1], line_no)?;
                    let v = parse_count(parts[2], line_no)? as u64;
                    labels.push((i, v, line_no));
                }
                _ => {
                    let i = parse_count(parts[0], line_no)?;
                    let arg = |k: usize| -> Result<usize> {
                        parts
                            .get(k)
                            .ok_or_else(|| Error::parse(line_no, "missing gate input"))
                            .and_then(|t| parse_count(t, line_no))
                    };
                    let (gate, arity) = match parts.get(1).copied() {
                        Some("INPUT") => (Gate::Input, 0),
                        Some("TRUE") => (Gate::Const(true), 0),
                        Some("FALSE") => (Gate::Const(false), 0),
                        Some("NOT") => (Gate::Not(arg(2)?), 1),
                        Some("AND") => (Gate::And(arg(2)?, arg(3)?), 2),
                        Some("OR") => (Gate::Or(arg(2)?, arg(3)?), 2),
                        _ => return Err(Error::parse(line_no, "unknown gate kind")),
                    };
                    if parts.len() != 2 + arity {
                        return Err(Error::parse(line_no, "wrong number of gate inputs"));
                    }
                    if i >= gates.len() {
                        gates.resize(i + 1, None);
                    }
                    if gates[i].replace(gate).is_some() {
                        return Err(Error::parse(line_no, format!("gate {i} defined twice")));
                    }
                }
            }
        }
        let gates: Vec<Gate> = gates
            .into_iter()
            .enumerate()
            .map(|(i, g)| g.ok_or_else(|| Error::parse(last_line, format!("gate {i} missing"))))
            .collect::<Result<_>>()?;
        let (output, out_line) =
            output.ok_or_else(|| Error::parse(last_line.max(1), "missing `out` line"))?;
        let mut circuit =
            VspCircuit::new(gates, output).map_err(|e| Error::parse(out_line, e.to_string()))?;
        if !labels.is_empty() {
            let mut values = vec![None; circuit.gates.len()];
            for (i, v, line) in labels {
                if i >= values.len() {
                    return Err(Error::parse(line, format!("label for missing gate {i}")));
                }
                if values[i].replace(v).is_some() {
                    return Err(Error::parse(line, format!("gate {i} labeled twice")));
                }
            }
            let values: Vec<u64> = values
                .into_iter()
                .enumerate()
                .map(|(i, v)| v.ok_or_else(|| Error::parse(last_line, format!("gate {i} unlabeled"))))
                .collect::<Result<_>>()?;
            circuit = circuit.with_labels(values)?;
        }
        Ok(circuit)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, g) in self.gates.iter().enumerate() {
            out.push_str(&format!("{i} {g}\n"));
        }
        out.push_str(&format!("out {}\n", self.output));
        if let Some(labels) = &self.labels {
            for (i, l) in labels.iter().enumerate() {
                out.push_str(&format!("label {i} {l}\n"));
            }
        }
        out
    }
}

fn topological_order(gates: &[Gate]) -> Option<Vec<usize>> {
    let n = gates.len();
    let mut indeg = vec![0usize; n];
    let mut succ = vec![Vec::new(); n];
    for (t, g) in gates.iter().enumerate() {
        for s in g.sources() {
            indeg[t] += 1;
            succ[s].push(t);
        }
    }
    let mut stack: Vec<usize> = (0..n).rev().filter(|&i| indeg[i] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(v) = stack.pop() {
        order.push(v);
        for &t in &succ[v] {
            indeg[t] -= 1;
            if indeg[t] == 0 {
                stack.push(t);
            }
        }
    }
    (order.len() == n).then_some(order)
}
