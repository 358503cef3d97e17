def pytest_terminal_summary(terminalreporter, exitstatus, config):
    # re-emit the one-line-per-criterion verdicts from the acceptance tests,
    # which normal output capture would otherwise hide on success
    lines = []
    for status in ("passed", "failed"):
        for rep in terminalreporter.stats.get(status, []):
            if "test_acceptance" not in rep.nodeid:
                continue
            for ln in getattr(rep, "capstdout", "").splitlines():
                if ln.startswith("criterion"):
                    lines.append(ln)
    if lines:
        terminalreporter.section("acceptance criteria")
        for ln in lines:
            terminalreporter.write_line(ln)
