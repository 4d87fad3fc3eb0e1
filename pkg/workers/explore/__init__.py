"""Celery worker running exploration batches."""
