import json
from typing import List, Optional

from celery import Celery
from celery.utils.log import get_task_logger
from dotenv import load_dotenv

from shared.config import get_settings
from shared.criteria.explore import explore_random, summarize

load_dotenv()

settings = get_settings()

app = Celery("explore", broker=settings.celery_broker_url, backend=settings.celery_result_backend)
app.conf.task_default_queue = "explore"
app.conf.task_serializer = "json"
app.conf.result_serializer = "json"
# no broker process behind memory://, so run tasks in the caller
app.conf.task_always_eager = settings.celery_broker_url.startswith("memory")

logger = get_task_logger(__name__)


@app.task(queue="explore")
def run_explore_batch(
    seed: int,
    count: int,
    n_max: int,
    n_min: int = 3,
    fields: Optional[List[str]] = None,
    budget: Optional[int] = None,
) -> dict:
    logger.info("explore batch seed=%d count=%d n=%d..%d", seed, count, n_min, n_max)
    reports = explore_random(seed, count, n_max, n_min=n_min, fields=fields, budget=budget)
    out = summarize(reports)
    out["seed"] = seed
    out["reports"] = [json.loads(r.json(sort_keys=True)) for r in reports]
    return out
