# Generated by Django 6.0.2 on 2026-10-17 09:00

from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = []

    operations = [
        migrations.CreateModel(
            name="AuditRun",
            fields=[
                (
                    "id",
                    models.BigAutoField(
                        auto_created=True,
                        primary_key=True,
                        serialize=False,
                        verbose_name="ID",
                    ),
                ),
                (
                    "family",
                    models.CharField(
                        choices=[
                            ("ll", "Lamplighter"),
                            ("bs", "Baumslag-Solitar"),
                            ("pc", "Polycyclic"),
                        ],
                        max_length=2,
                    ),
                ),
                ("q", models.PositiveIntegerField(blank=True, null=True)),
                ("spec", models.JSONField(blank=True, null=True)),
                ("seed", models.BigIntegerField()),
                ("samples", models.PositiveIntegerField()),
                ("max_len", models.PositiveIntegerField()),
                ("violations", models.PositiveIntegerField(default=0)),
                ("max_ratio", models.FloatField(blank=True, null=True)),
                ("mean_ratio", models.FloatField(blank=True, null=True)),
                ("report", models.JSONField()),
                ("created_at", models.DateTimeField(auto_now_add=True)),
            ],
            options={
                "ordering": ("-created_at", "-id"),
            },
        ),
    ]
