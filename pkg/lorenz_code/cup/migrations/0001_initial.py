# Generated manually for MectMeasurement model

from django.db import migrations, models
import django.utils.timezone
import model_utils.fields


class Migration(migrations.Migration):

    initial = True

    dependencies = []

    operations = [
        migrations.CreateModel(
            name='MectMeasurement',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('created', model_utils.fields.AutoCreatedField(default=django.utils.timezone.now, editable=False, verbose_name='created')),
                ('modified', model_utils.fields.AutoLastModifiedField(default=django.utils.timezone.now, editable=False, verbose_name='modified')),
                ('precision_bits', models.PositiveIntegerField(db_index=True, verbose_name='Precision (bits)')),
                ('step', models.FloatField(verbose_name='Step size h')),
                ('delta', models.FloatField(help_text='Absolute gap in x that marks divergence', verbose_name='Divergence threshold')),
                ('mect', models.FloatField(help_text='First time the run leaves the reference, nondimensional', verbose_name='MECT')),
                ('reference_precision', models.PositiveIntegerField(verbose_name='Reference precision (bits)')),
                ('t_max', models.FloatField(verbose_name='Horizon')),
                ('parameters', models.JSONField(blank=True, default=dict, help_text='Exact values as decimal or a/b strings', verbose_name='Base parameters')),
            ],
            options={
                'verbose_name': 'MECT measurement',
                'verbose_name_plural': 'MECT measurements',
                'ordering': ['-created'],
            },
        ),
    ]
