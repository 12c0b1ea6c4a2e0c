//! Stop-word lists. The file format is one token per line, UTF-8.

use std::collections::HashSet;
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;
use std::sync::OnceLock;

use crate::Result;

static SPANISH: OnceLock<HashSet<String>> = OnceLock::new();

/// Bundled Spanish function-word list.
pub fn default_spanish() -> &'static HashSet<String> {
    SPANISH.get_or_init(|| {
        include_str!("spanish_stopwords.txt")
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(str::to_string)
            .collect()
    })
}

/// Load a stop-word file: one token per line, blank lines ignored.
pub fn load(path: &Path) -> Result<HashSet<String>> {
    let reader = BufReader::new(File::open(path)?);
    let mut set = HashSet::new();
    for line in reader.lines() {
        let line = line?;
        let token = line.trim();
        if !token.is_empty() {
            set.insert(token.to_string());
        }
    }
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    #[test]
    fn default_list_contains_core_function_words() {
        let sw = default_spanish();
        for w in ["la", "de", "que", "y", "en"] {
            assert!(sw.contains(w), "missing {w}");
        }
        assert!(!sw.contains("elección"));
    }

    #[test]
    fn load_skips_blank_lines() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        writeln!(f, "uno\n\n  dos  \n").unwrap();
        let set = load(f.path()).unwrap();
        assert_eq!(set.len(), 2);
        assert!(set.contains("dos"));
    }
}
