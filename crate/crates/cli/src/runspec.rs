//! Declarative run specification files.
//!
//! A spec is UTF-8 text made of `[section]` headers and `key = value` lines.
//! `#` starts a comment. Every physical quantity carries a unit token.
//!
//! ```text
//! [pile]
//! length = 26 m
//! diameter = 1 m
//! elastic_modulus = 29.2 GPa
//! thermal_expansion = 1e-5 1/degC
//! shaft_stiffness = 16.7 MPa/m
//! tip_stiffness = 0 MPa/m
//!
//! [options]
//! variant = fully-floating
//! grid = 1001
//!
//! [load]
//! name = i-0.5MN
//! force = -0.5 MN
//! delta_t = -10 degC
//!
//! [load]
//! scenario = II
//! eta = 2.0
//! anchor_force = -0.5 MN
//!
//! [sweep]
//! pair = both
//! eta_min = 1
//! eta_max = 1000
//! count = 200
//! spacing = log
//! anchor_force = -0.5 MN
//! ```
//!
//! `[pile]` and at least one `[load]` or `[sweep]` are required; `[options]` and
//! `[output]` are optional and may appear once each.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;

use pile_core::analytic::{Variant, DEFAULT_GRID_POINTS};
use pile_core::nullpoint::{eta_grid, Spacing};
use pile_core::{LoadAnchor, LoadCase, PileGeometry, PileMaterial, PileSystem, Scenario, ScenarioPair, SoilSprings};

use crate::error::CliError;
use crate::units::{Dimension, Quantity, Unit};

/// Which end of the pile output coordinates are measured from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DepthFrom {
    /// Height above the tip, `x`.
    #[default]
    Tip,
    /// Depth below the head, `L − x`.
    Head,
}

impl DepthFrom {
    pub fn parse(text: &str) -> Option<Self> {
        match text {
            "tip" => Some(DepthFrom::Tip),
            "head" => Some(DepthFrom::Head),
            _ => None,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            DepthFrom::Tip => "tip",
            DepthFrom::Head => "head",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Formats {
    pub csv: bool,
    pub json: bool,
    pub svg: bool,
}

impl Default for Formats {
    fn default() -> Self {
        Self { csv: true, json: true, svg: true }
    }
}

impl Formats {
    /// Comma-separated subset of `csv`, `json`, `svg`.
    pub fn parse(text: &str) -> Result<Self, String> {
        let mut f = Formats { csv: false, json: false, svg: false };
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            match item {
                "csv" => f.csv = true,
                "json" => f.json = true,
                "svg" => f.svg = true,
                other => return Err(format!("unknown output format '{other}'")),
            }
        }
        if !(f.csv || f.json || f.svg) {
            return Err("no output format selected".into());
        }
        Ok(f)
    }

    fn render(self) -> String {
        let mut v = Vec::new();
        if self.csv {
            v.push("csv");
        }
        if self.json {
            v.push("json");
        }
        if self.svg {
            v.push("svg");
        }
        v.join(", ")
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PileBlock {
    pub length: Quantity,
    pub diameter: Quantity,
    pub elastic_modulus: Quantity,
    pub thermal_expansion: Quantity,
    pub shaft_stiffness: Quantity,
    pub tip_stiffness: Quantity,
}

impl PileBlock {
    pub fn system(&self) -> Result<PileSystem, CliError> {
        Ok(PileSystem::new(
            PileGeometry::new(self.length.si(), self.diameter.si())?,
            PileMaterial::new(self.elastic_modulus.si(), self.thermal_expansion.si())?,
            SoilSprings::new(self.shaft_stiffness.si(), self.tip_stiffness.si())?,
        )?)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum AnchorSpec {
    Force(Quantity),
    DeltaT(Quantity),
}

impl AnchorSpec {
    pub fn anchor(&self) -> LoadAnchor {
        match self {
            AnchorSpec::Force(q) => LoadAnchor::Force(q.si()),
            AnchorSpec::DeltaT(q) => LoadAnchor::DeltaT(q.si()),
        }
    }

    fn render(&self) -> String {
        match self {
            AnchorSpec::Force(q) => format!("anchor_force = {q}"),
            AnchorSpec::DeltaT(q) => format!("anchor_delta_t = {q}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum LoadSpec {
    Direct { force: Quantity, delta_t: Quantity },
    Eta { scenario: Scenario, eta: f64, anchor: AnchorSpec },
}

#[derive(Debug, Clone, PartialEq)]
pub struct LoadBlock {
    pub name: String,
    pub spec: LoadSpec,
}

impl LoadBlock {
    pub fn load_case(&self, system: &PileSystem) -> Result<LoadCase, CliError> {
        Ok(match &self.spec {
            LoadSpec::Direct { force, delta_t } => LoadCase::new(force.si(), delta_t.si(), system)?,
            LoadSpec::Eta { scenario, eta, anchor } => {
                LoadCase::from_eta(*scenario, *eta, anchor.anchor(), system)?
            }
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum EtaSpec {
    List(Vec<f64>),
    Range { min: f64, max: f64, count: usize, spacing: Spacing },
}

impl EtaSpec {
    pub fn values(&self) -> Result<Vec<f64>, CliError> {
        match self {
            EtaSpec::List(v) => Ok(v.clone()),
            EtaSpec::Range { min, max, count, spacing } => Ok(eta_grid(*min, *max, *count, *spacing)?),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepBlock {
    pub name: String,
    pub pairs: Vec<ScenarioPair>,
    pub etas: EtaSpec,
    pub anchor: AnchorSpec,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Options {
    pub variant: Variant,
    pub grid: usize,
    pub depth_from: DepthFrom,
}

impl Default for Options {
    fn default() -> Self {
        Self { variant: Variant::FullyFloating, grid: DEFAULT_GRID_POINTS, depth_from: DepthFrom::Tip }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OutputBlock {
    pub dir: PathBuf,
    pub formats: Formats,
}

impl Default for OutputBlock {
    fn default() -> Self {
        Self { dir: PathBuf::from("out"), formats: Formats::default() }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunSpec {
    pub pile: PileBlock,
    pub options: Options,
    pub output: OutputBlock,
    pub loads: Vec<LoadBlock>,
    pub sweeps: Vec<SweepBlock>,
}

/// Key/value lines of one section, with the line each came from.
struct Section {
    name: String,
    line: usize,
    entries: BTreeMap<String, (usize, String)>,
}

impl Section {
    fn take(&mut self, key: &str) -> Option<(usize, String)> {
        self.entries.remove(key)
    }

    fn require(&mut self, key: &str) -> Result<(usize, String), CliError> {
        self.take(key)
            .ok_or_else(|| CliError::parse(self.line, format!("[{}] is missing '{key}'", self.name)))
    }

    fn quantity(&mut self, key: &str, dim: Dimension) -> Result<Option<Quantity>, CliError> {
        self.take(key)
            .map(|(line, v)| Quantity::parse(&v, dim).map_err(|m| CliError::parse(line, format!("{key}: {m}"))))
            .transpose()
    }

    fn required_quantity(&mut self, key: &str, dim: Dimension) -> Result<Quantity, CliError> {
        let (line, v) = self.require(key)?;
        Quantity::parse(&v, dim).map_err(|m| CliError::parse(line, format!("{key}: {m}")))
    }

    fn number<T: std::str::FromStr>(&mut self, key: &str) -> Result<Option<T>, CliError> {
        self.take(key)
            .map(|(line, v)| {
                v.parse::<T>()
                    .map_err(|_| CliError::parse(line, format!("{key}: '{v}' is not a valid number")))
            })
            .transpose()
    }

    fn finish(self) -> Result<(), CliError> {
        match self.entries.into_iter().min_by_key(|(_, (line, _))| *line) {
            Some((key, (line, _))) => Err(CliError::parse(line, format!("unknown key '{key}' in [{}]", self.name))),
            None => Ok(()),
        }
    }
}

fn split_sections(text: &str) -> Result<Vec<Section>, CliError> {
    let mut sections: Vec<Section> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if let Some(name) = content.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
            sections.push(Section { name: name.trim().to_string(), line, entries: BTreeMap::new() });
            continue;
        }
        let Some((key, value)) = content.split_once('=') else {
            return Err(CliError::parse(line, format!("expected 'key = value', got '{content}'")));
        };
        let Some(section) = sections.last_mut() else {
            return Err(CliError::parse(line, "key outside of any [section]"));
        };
        let key = key.trim().to_string();
        if section.entries.contains_key(&key) {
            return Err(CliError::parse(line, format!("duplicate key '{key}'")));
        }
        section.entries.insert(key, (line, value.trim().to_string()));
    }
    Ok(sections)
}

fn parse_anchor(s: &mut Section) -> Result<AnchorSpec, CliError> {
    let force = s.quantity("anchor_force", Dimension::Force)?;
    let delta_t = s.quantity("anchor_delta_t", Dimension::TemperatureChange)?;
    match (force, delta_t) {
        (Some(f), None) => Ok(AnchorSpec::Force(f)),
        (None, Some(t)) => Ok(AnchorSpec::DeltaT(t)),
        _ => Err(CliError::parse(
            s.line,
            format!("[{}] needs exactly one of 'anchor_force' or 'anchor_delta_t'", s.name),
        )),
    }
}

fn parse_pile(mut s: Section) -> Result<PileBlock, CliError> {
    let block = PileBlock {
        length: s.required_quantity("length", Dimension::Length)?,
        diameter: s.required_quantity("diameter", Dimension::Length)?,
        elastic_modulus: s.required_quantity("elastic_modulus", Dimension::Modulus)?,
        thermal_expansion: s.required_quantity("thermal_expansion", Dimension::Expansion)?,
        shaft_stiffness: s.required_quantity("shaft_stiffness", Dimension::Stiffness)?,
        tip_stiffness: s
            .quantity("tip_stiffness", Dimension::Stiffness)?
            .unwrap_or_else(|| Quantity::from_si(0.0, Unit::MegaPascalPerMeter)),
    };
    s.finish()?;
    Ok(block)
}

fn parse_options(mut s: Section) -> Result<Options, CliError> {
    let mut o = Options::default();
    if let Some((line, v)) = s.take("variant") {
        o.variant = match v.as_str() {
            "fully-floating" => Variant::FullyFloating,
            "semi-floating" => Variant::SemiFloating,
            _ => return Err(CliError::parse(line, format!("unknown variant '{v}'"))),
        };
    }
    if let Some(g) = s.number::<usize>("grid")? {
        o.grid = g;
    }
    if let Some((line, v)) = s.take("depth_from") {
        o.depth_from = DepthFrom::parse(&v).ok_or_else(|| CliError::parse(line, format!("depth_from must be tip or head, got '{v}'")))?;
    }
    s.finish()?;
    Ok(o)
}

fn parse_output(mut s: Section) -> Result<OutputBlock, CliError> {
    let mut o = OutputBlock::default();
    if let Some((_, v)) = s.take("dir") {
        o.dir = PathBuf::from(v);
    }
    if let Some((line, v)) = s.take("formats") {
        o.formats = Formats::parse(&v).map_err(|m| CliError::parse(line, m))?;
    }
    s.finish()?;
    Ok(o)
}

fn parse_load(mut s: Section, index: usize) -> Result<LoadBlock, CliError> {
    let name = s.take("name").map(|(_, v)| v).unwrap_or_else(|| format!("case-{index}"));
    let spec = if let Some((line, sc)) = s.take("scenario") {
        let scenario = Scenario::parse(&sc).ok_or_else(|| CliError::parse(line, format!("unknown scenario '{sc}'")))?;
        let eta = s.number::<f64>("eta")?.ok_or_else(|| CliError::parse(s.line, "[load] with 'scenario' needs 'eta'"))?;
        LoadSpec::Eta { scenario, eta, anchor: parse_anchor(&mut s)? }
    } else {
        let force = s.quantity("force", Dimension::Force)?;
        let delta_t = s.quantity("delta_t", Dimension::TemperatureChange)?;
        if force.is_none() && delta_t.is_none() {
            return Err(CliError::parse(s.line, "[load] needs 'force' and/or 'delta_t', or 'scenario' with 'eta'"));
        }
        LoadSpec::Direct {
            force: force.unwrap_or_else(|| Quantity::from_si(0.0, Unit::MegaNewton)),
            delta_t: delta_t.unwrap_or_else(|| Quantity::from_si(0.0, Unit::DegC)),
        }
    };
    s.finish()?;
    Ok(LoadBlock { name, spec })
}

fn parse_sweep(mut s: Section, index: usize) -> Result<SweepBlock, CliError> {
    let name = s.take("name").map(|(_, v)| v).unwrap_or_else(|| format!("sweep-{index}"));
    let pairs = match s.take("pair") {
        None => vec![ScenarioPair::SameSign, ScenarioPair::OppositeSign],
        Some((line, v)) => match v.as_str() {
            "both" => vec![ScenarioPair::SameSign, ScenarioPair::OppositeSign],
            "same-sign" => vec![ScenarioPair::SameSign],
            "opposite-sign" => vec![ScenarioPair::OppositeSign],
            _ => return Err(CliError::parse(line, format!("pair must be same-sign, opposite-sign or both, got '{v}'"))),
        },
    };
    let etas = if let Some((line, list)) = s.take("etas") {
        let values = list
            .split(',')
            .map(|t| t.trim().parse::<f64>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| CliError::parse(line, format!("etas: '{list}' is not a list of numbers")))?;
        if values.is_empty() || values.iter().any(|e| !(*e > 0.0 && e.is_finite())) {
            return Err(CliError::parse(line, "etas must be positive"));
        }
        if values.windows(2).any(|w| w[1] <= w[0]) {
            return Err(CliError::parse(line, "etas must be strictly increasing"));
        }
        EtaSpec::List(values)
    } else {
        let line = s.line;
        let min = s.number::<f64>("eta_min")?;
        let max = s.number::<f64>("eta_max")?;
        let count = s.number::<usize>("count")?;
        let spacing = match s.take("spacing") {
            None => Spacing::Log,
            Some((_, v)) if v == "log" => Spacing::Log,
            Some((_, v)) if v == "linear" => Spacing::Linear,
            Some((l, v)) => return Err(CliError::parse(l, format!("spacing must be linear or log, got '{v}'"))),
        };
        match (min, max, count) {
            (Some(min), Some(max), Some(count)) => {
                let spec = EtaSpec::Range { min, max, count, spacing };
                spec.values().map_err(|e| CliError::parse(line, e.to_string()))?;
                spec
            }
            _ => return Err(CliError::parse(line, "[sweep] needs 'etas' or all of 'eta_min', 'eta_max', 'count'")),
        }
    };
    let anchor = parse_anchor(&mut s)?;
    s.finish()?;
    Ok(SweepBlock { name, pairs, etas, anchor })
}

impl RunSpec {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut pile = None;
        let mut options = None;
        let mut output = None;
        let mut loads = Vec::new();
        let mut sweeps = Vec::new();
        for section in split_sections(text)? {
            let line = section.line;
            let once = |seen: bool, name: &str| {
                if seen {
                    Err(CliError::parse(line, format!("[{name}] may appear only once")))
                } else {
                    Ok(())
                }
            };
            match section.name.as_str() {
                "pile" => {
                    once(pile.is_some(), "pile")?;
                    pile = Some(parse_pile(section)?);
                }
                "options" => {
                    once(options.is_some(), "options")?;
                    options = Some(parse_options(section)?);
                }
                "output" => {
                    once(output.is_some(), "output")?;
                    output = Some(parse_output(section)?);
                }
                "load" => loads.push(parse_load(section, loads.len() + 1)?),
                "sweep" => sweeps.push(parse_sweep(section, sweeps.len() + 1)?),
                other => return Err(CliError::parse(line, format!("unknown section [{other}]"))),
            }
        }
        let pile = pile.ok_or_else(|| CliError::Validation("missing [pile] section".into()))?;
        if loads.is_empty() && sweeps.is_empty() {
            return Err(CliError::Validation("at least one [load] or [sweep] section is required".into()));
        }
        let spec = RunSpec {
            pile,
            options: options.unwrap_or_default(),
            output: output.unwrap_or_default(),
            loads,
            sweeps,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn read(path: &std::path::Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        Self::parse(&text)
    }

    /// Checks physical invariants and that every load case can be built.
    pub fn validate(&self) -> Result<(), CliError> {
        if self.options.grid < 2 {
            return Err(CliError::Validation(format!("grid must be at least 2, got {}", self.options.grid)));
        }
        let names = self.loads.iter().map(|l| &l.name).chain(self.sweeps.iter().map(|s| &s.name));
        if let Some(bad) = names.into_iter().find(|n| n.contains([',', '"'])) {
            return Err(CliError::Validation(format!("name '{bad}' must not contain ',' or '\"'")));
        }
        let system = self.system()?;
        for load in &self.loads {
            load.load_case(&system)?;
        }
        for sweep in &self.sweeps {
            for pair in &sweep.pairs {
                let scenario = LoadCase::scenario_for(*pair, sweep.anchor.anchor());
                LoadCase::from_eta(scenario, sweep.etas.values()?[0], sweep.anchor.anchor(), &system)?;
            }
        }
        Ok(())
    }

    pub fn system(&self) -> Result<PileSystem, CliError> {
        self.pile.system()
    }

    /// Canonical text of this spec; parses back to an equal value.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let p = &self.pile;
        let _ = writeln!(out, "[pile]");
        let _ = writeln!(out, "length = {}", p.length);
        let _ = writeln!(out, "diameter = {}", p.diameter);
        let _ = writeln!(out, "elastic_modulus = {}", p.elastic_modulus);
        let _ = writeln!(out, "thermal_expansion = {}", p.thermal_expansion);
        let _ = writeln!(out, "shaft_stiffness = {}", p.shaft_stiffness);
        let _ = writeln!(out, "tip_stiffness = {}", p.tip_stiffness);
        let _ = writeln!(out, "\n[options]");
        let _ = writeln!(out, "variant = {}", self.options.variant.label());
        let _ = writeln!(out, "grid = {}", self.options.grid);
        let _ = writeln!(out, "depth_from = {}", self.options.depth_from.label());
        let _ = writeln!(out, "\n[output]");
        let _ = writeln!(out, "dir = {}", self.output.dir.display());
        let _ = writeln!(out, "formats = {}", self.output.formats.render());
        for load in &self.loads {
            let _ = writeln!(out, "\n[load]\nname = {}", load.name);
            match &load.spec {
                LoadSpec::Direct { force, delta_t } => {
                    let _ = writeln!(out, "force = {force}\ndelta_t = {delta_t}");
                }
                LoadSpec::Eta { scenario, eta, anchor } => {
                    let _ = writeln!(out, "scenario = {scenario}\neta = {eta}\n{}", anchor.render());
                }
            }
        }
        for sweep in &self.sweeps {
            let _ = writeln!(out, "\n[sweep]\nname = {}", sweep.name);
            let pair = match sweep.pairs.as_slice() {
                [p] => p.label(),
                _ => "both",
            };
            let _ = writeln!(out, "pair = {pair}");
            match &sweep.etas {
                EtaSpec::List(v) => {
                    let list: Vec<String> = v.iter().map(|e| e.to_string()).collect();
                    let _ = writeln!(out, "etas = {}", list.join(", "));
                }
                EtaSpec::Range { min, max, count, spacing } => {
                    let sp = match spacing {
                        Spacing::Linear => "linear",
                        Spacing::Log => "log",
                    };
                    let _ = writeln!(out, "eta_min = {min}\neta_max = {max}\ncount = {count}\nspacing = {sp}");
                }
            }
            let _ = writeln!(out, "{}", sweep.anchor.render());
        }
        out
    }
}
