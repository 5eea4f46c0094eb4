//! Replays every `$ mnforge ...` transcript in the command-line chapter.

use mnforge_cli::{run_command, Cli, Format};

const CHAPTER: &str = include_str!("../../../book/src/command-line.md");

/// Splits on whitespace, keeping double-quoted runs together.
fn shell_words(line: &str) -> Vec<String> {
    let mut words = Vec::new();
    let mut cur = String::new();
    let mut quoted = false;
    let mut started = false;
    for ch in line.chars() {
        match ch {
            '"' => {
                quoted = !quoted;
                started = true;
            }
            c if c.is_whitespace() && !quoted => {
                if started {
                    words.push(std::mem::take(&mut cur));
                    started = false;
                }
            }
            c => {
                cur.push(c);
                started = true;
            }
        }
    }
    if started {
        words.push(cur);
    }
    words
}

struct Transcript {
    argv: Vec<String>,
    expected: String,
}

fn transcripts() -> Vec<Transcript> {
    let mut out = Vec::new();
    let mut in_console = false;
    let mut current: Option<Transcript> = None;
    for line in CHAPTER.lines() {
        if line.starts_with("```") {
            in_console = line == "```console";
            out.extend(current.take());
            continue;
        }
        if !in_console {
            continue;
        }
        if let Some(cmd) = line.strip_prefix("$ ") {
            out.extend(current.take());
            current = Some(Transcript {
                argv: shell_words(cmd),
                expected: String::new(),
            });
        } else if let Some(t) = current.as_mut() {
            t.expected.push_str(line);
            t.expected.push('\n');
        }
    }
    out
}

#[test]
fn chapter_transcripts_match() {
    let all = transcripts();
    assert!(all.len() >= 10, "found only {} transcripts", all.len());
    for t in all {
        assert_eq!(t.argv[0], "mnforge");
        let format = <Cli as clap::Parser>::try_parse_from(&t.argv).map_or(Format::Text, |c| c.format);
        let result = run_command(&t.argv);
        assert_eq!(result.exit_code, 0, "{:?}: {}", t.argv, result.diagnostics);
        assert_eq!(result.stdout(format), t.expected, "{:?}", t.argv);
    }
}
