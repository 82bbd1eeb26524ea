//! Event scripts: a line-oriented list of synthetic events to fire.
//!
//! ```text
//! # comment
//! trigger tp/sched/sched_process_exec 00112233
//! args kprobe/do_unlinkat 3 4096
//! sleep 10
//! ```

use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;
use std::thread::JoinHandle;
use std::time::Duration;

use thiserror::Error;

use crate::events::EventHub;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScriptStep {
    /// Fire a source with raw context bytes.
    Trigger { source: String, ctx: Vec<u8> },
    /// Fire a source with a register frame built from arguments.
    Args { source: String, args: Vec<u64> },
    Sleep(Duration),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ScriptError {
    pub line: usize,
    pub message: String,
}

fn parse_u64(s: &str) -> Option<u64> {
    match s.strip_prefix("0x") {
        Some(h) => u64::from_str_radix(h, 16).ok(),
        None => s.parse().ok(),
    }
}

pub fn parse_script(text: &str) -> Result<Vec<ScriptStep>, ScriptError> {
    let mut steps = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let err = |message: String| ScriptError { line: i + 1, message };
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut words = line.split_whitespace();
        let verb = words.next().unwrap_or_default();
        let rest: Vec<&str> = words.collect();
        let step = match verb {
            "trigger" => {
                let (source, hex) = match rest.as_slice() {
                    [s] => (*s, String::new()),
                    [s, h @ ..] => (*s, h.concat()),
                    [] => return Err(err("trigger needs a source".into())),
                };
                let ctx = hex::decode(&hex).map_err(|e| err(format!("bad context bytes: {e}")))?;
                ScriptStep::Trigger {
                    source: source.to_string(),
                    ctx,
                }
            }
            "args" => {
                let Some((source, nums)) = rest.split_first() else {
                    return Err(err("args needs a source".into()));
                };
                let args = nums
                    .iter()
                    .map(|n| parse_u64(n).ok_or_else(|| err(format!("bad argument {n:?}"))))
                    .collect::<Result<Vec<_>, _>>()?;
                if args.len() > 6 {
                    return Err(err("at most 6 arguments".into()));
                }
                ScriptStep::Args {
                    source: source.to_string(),
                    args,
                }
            }
            "sleep" => match rest.as_slice() {
                [ms] => ScriptStep::Sleep(Duration::from_millis(
                    ms.parse().map_err(|_| err(format!("bad duration {ms:?}")))?,
                )),
                _ => return Err(err("sleep takes one duration in milliseconds".into())),
            },
            other => return Err(err(format!("unknown step {other:?}"))),
        };
        steps.push(step);
    }
    Ok(steps)
}

/// Fire every step in order; returns the total number of program runs.
pub fn replay(steps: &[ScriptStep], hub: &EventHub) -> usize {
    let mut runs = 0;
    for step in steps {
        match step {
            ScriptStep::Trigger { source, ctx } => runs += hub.trigger_event(source, ctx),
            ScriptStep::Args { source, args } => runs += hub.trigger_args(source, args),
            ScriptStep::Sleep(d) => std::thread::sleep(*d),
        }
    }
    runs
}

/// Replay `steps` on a new thread once the guest has attached something
/// (or give up when `shutdown` is raised first), then raise `shutdown` so the guest's next empty poll ends its loop.
pub fn spawn_replay(
    steps: Vec<ScriptStep>,
    hub: Arc<EventHub>,
    shutdown: Arc<AtomicBool>,
    attach_timeout: Duration,
) -> JoinHandle<usize> {
    std::thread::spawn(move || {
        let deadline = std::time::Instant::now() + attach_timeout;
        while hub.attachment_count() == 0
            && !shutdown.load(Ordering::Acquire)
            && std::time::Instant::now() < deadline
        {
            std::thread::sleep(Duration::from_millis(1));
        }
        let runs = if hub.attachment_count() > 0 {
            replay(&steps, &hub)
        } else {
            log::warn!("guest attached no programs within {attach_timeout:?}; events not fired");
            0
        };
        shutdown.store(true, Ordering::Release);
        runs
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_steps() {
        let s = parse_script("# c\n\ntrigger a 0011 22\nargs k 1 0x10\nsleep 5 # trailing\ntrigger b\n").unwrap();
        assert_eq!(
            s,
            vec![
                ScriptStep::Trigger {
                    source: "a".into(),
                    ctx: vec![0, 0x11, 0x22]
                },
                ScriptStep::Args {
                    source: "k".into(),
                    args: vec![1, 16]
                },
                ScriptStep::Sleep(Duration::from_millis(5)),
                ScriptStep::Trigger {
                    source: "b".into(),
                    ctx: vec![]
                },
            ]
        );
    }

    #[test]
    fn reports_line_numbers() {
        assert_eq!(parse_script("sleep 1\nbogus x").unwrap_err().line, 2);
        assert!(parse_script("trigger a 0").is_err());
        assert!(parse_script("args k 1 2 3 4 5 6 7").is_err());
        assert!(parse_script("args").is_err());
        assert!(parse_script("sleep").is_err());
    }
}
