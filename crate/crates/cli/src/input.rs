use std::fs;
use std::path::Path;

use trace_recon::Word;

use crate::report::CliError;

/// Words from a newline-delimited file; `#` starts a comment and blank
/// lines are skipped.
pub fn read_words(path: &Path) -> Result<Vec<Word>, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    parse_words(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

pub fn parse_words(text: &str) -> Result<Vec<Word>, String> {
    let mut words = Vec::new();
    for (no, line) in text.lines().enumerate() {
        let content = line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let w = content.parse::<Word>().map_err(|e| format!("line {}: {e}", no + 1))?;
        words.push(w);
    }
    Ok(words)
}
