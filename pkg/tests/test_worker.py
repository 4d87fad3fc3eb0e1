from workers.explore.tasks import app, run_explore_batch


def test_worker_runs_eagerly_without_a_broker():
    assert app.conf.task_always_eager


def test_explore_batch_task():
    result = run_explore_batch.apply(args=(2, 3, 4), kwargs={"fields": ["Q"]}).get()
    assert result["seed"] == 2
    assert result["audited"] == len(result["reports"])
    assert result["violations"] == 0
    assert all(r["violations"] == [] for r in result["reports"])
